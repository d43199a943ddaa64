from eightpoints.cache.artifacts import ARTIFACTS, CUBIC, KEMPE_BINDING, QUINTIC, ArtifactCache, ArtifactRecord

__all__ = ["ARTIFACTS", "CUBIC", "KEMPE_BINDING", "QUINTIC", "ArtifactCache", "ArtifactRecord"]
