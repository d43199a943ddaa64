"""On-disk cache for the expensive artifacts: the Kempe binding, the cubic and the quintic.

Each artifact is a text file next to a manifest.json recording its SHA-256,
size, seed and builder. With EIGHTPOINTS_ARTIFACT_KEY set the manifest is
signed with HMAC-SHA256. A missing file, a checksum mismatch or a bad
signature triggers a rebuild.
"""

from __future__ import annotations

import hashlib
import hmac
import json
import logging
import os
import shutil
import tempfile
import threading
from dataclasses import asdict, dataclass
from typing import Any, Callable, Dict, List, Optional

from tenacity import retry, retry_if_exception_type, stop_after_attempt, wait_exponential

from eightpoints import config
from eightpoints.errors import ArtifactIntegrityError
from eightpoints.exactcore.polynomial import SparsePolynomial, dumps_polynomial, loads_polynomial
from eightpoints.metrics import artifact_rebuilds_total

logger = logging.getLogger(__name__)

MANIFEST = "manifest.json"
KEMPE_BINDING = "kempe_binding.json"
CUBIC = "cubic.poly"
QUINTIC = "quintic.poly"
ARTIFACTS = (KEMPE_BINDING, CUBIC, QUINTIC)

io_retry = retry(
    retry=retry_if_exception_type(OSError),
    stop=stop_after_attempt(3),
    wait=wait_exponential(multiplier=1, min=1, max=10),
    reraise=True,
)


@dataclass
class ArtifactRecord:
    name: str
    sha256: str
    size: int
    seed: int
    builder: str


# -----------------------
# Integrity helpers
# -----------------------
def canonical_json_obj(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def sign_manifest(artifacts: Dict[str, Any], key: str) -> str:
    payload = canonical_json_obj(artifacts).encode()
    return hmac.new(key.encode(), payload, hashlib.sha256).hexdigest()


def verify_manifest_signature(artifacts: Dict[str, Any], signature: str, key: str) -> bool:
    try:
        return hmac.compare_digest(sign_manifest(artifacts, key), signature or "")
    except Exception as e:
        logger.error(f"Manifest signature check failed: {e}", exc_info=True)
        return False


# -----------------------
# Builders
# -----------------------
def _build_kempe_binding(master_seed: int) -> str:
    from eightpoints.m8.binding import bind_kempe_labels

    return bind_kempe_labels().dumps()


def _build_cubic(master_seed: int) -> str:
    from eightpoints.m8.cubic import build_cubic_explicit

    return dumps_polynomial(build_cubic_explicit())


def _build_quintic(master_seed: int) -> str:
    from eightpoints.n8.quintic import construct_skew_quintic

    return dumps_polynomial(construct_skew_quintic(master_seed=master_seed).quintic)


BUILDERS: Dict[str, Callable[[int], str]] = {
    KEMPE_BINDING: _build_kempe_binding,
    CUBIC: _build_cubic,
    QUINTIC: _build_quintic,
}


class ArtifactCache:
    """Checksummed text artifacts under one directory."""

    def __init__(
        self,
        directory: str = config.CACHE_DIR,
        key: str = config.ARTIFACT_KEY,
        master_seed: int = config.MASTER_SEED,
        builders: Optional[Dict[str, Callable[[int], str]]] = None,
    ):
        self.directory = directory
        self.key = key
        self.master_seed = master_seed
        self.builders = dict(builders or BUILDERS)
        self.warnings: List[str] = []
        self._lock = threading.RLock()

    def path(self, name: str) -> str:
        return os.path.join(self.directory, name)

    # -----------------------
    # Raw storage
    # -----------------------
    @io_retry
    def _read(self, name: str) -> str:
        with open(self.path(name), encoding="utf-8") as fh:
            return fh.read()

    @io_retry
    def _write(self, name: str, text: str) -> None:
        os.makedirs(self.directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=f".{name}.")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            os.replace(tmp, self.path(name))
        except OSError:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def load_manifest(self) -> Dict[str, Dict[str, Any]]:
        """Recorded artifacts, or {} when the manifest is missing, unreadable or badly signed."""
        if not os.path.exists(self.path(MANIFEST)):
            return {}
        try:
            payload = json.loads(self._read(MANIFEST))
        except (OSError, ValueError) as e:
            logger.warning(f"Unreadable artifact manifest, ignoring it: {e}")
            return {}
        artifacts = payload.get("artifacts", {})
        if self.key and not verify_manifest_signature(artifacts, payload.get("signature", ""), self.key):
            logger.warning("Artifact manifest signature does not verify, treating cache as empty")
            self.warnings.append("artifact manifest signature mismatch")
            return {}
        return artifacts

    def _store_manifest(self, artifacts: Dict[str, Dict[str, Any]]) -> None:
        payload: Dict[str, Any] = {"artifacts": artifacts}
        if self.key:
            payload["signature"] = sign_manifest(artifacts, self.key)
        self._write(MANIFEST, canonical_json_obj(payload) + "\n")

    # -----------------------
    # Artifact access
    # -----------------------
    def put(self, name: str, text: str, builder: str = "") -> ArtifactRecord:
        with self._lock:
            record = ArtifactRecord(
                name=name,
                sha256=sha256_text(text),
                size=len(text.encode()),
                seed=self.master_seed,
                builder=builder or name,
            )
            self._write(name, text)
            artifacts = self.load_manifest()
            artifacts[name] = asdict(record)
            self._store_manifest(artifacts)
            logger.info(f"Artifact {name} stored ({record.size} bytes, sha256 {record.sha256[:12]})")
            return record

    def get(self, name: str) -> Optional[str]:
        """The artifact text, or None when it is missing; raises on a checksum mismatch."""
        with self._lock:
            record = self.load_manifest().get(name)
            if record is None or not os.path.exists(self.path(name)):
                return None
            text = self._read(name)
            if sha256_text(text) != record["sha256"]:
                raise ArtifactIntegrityError(f"{name}: checksum mismatch")
            return text

    def get_or_build(self, name: str) -> str:
        with self._lock:
            try:
                text = self.get(name)
            except ArtifactIntegrityError as e:
                logger.warning(f"{e}, rebuilding")
                self.warnings.append(f"{name} failed its checksum and was rebuilt")
                text = None
            if text is not None:
                return text
            if name not in self.builders:
                raise ArtifactIntegrityError(f"no builder for artifact {name}")
            artifact_rebuilds_total.labels(artifact=name).inc()
            logger.info(f"Building artifact {name}")
            text = self.builders[name](self.master_seed)
            self.put(name, text, builder=self.builders[name].__name__.lstrip("_"))
            return text

    def build(self, names=ARTIFACTS) -> List[ArtifactRecord]:
        for name in names:
            self.get_or_build(name)
        manifest = self.load_manifest()
        return [ArtifactRecord(**manifest[name]) for name in names if name in manifest]

    def show(self) -> List[Dict[str, Any]]:
        rows = []
        manifest = self.load_manifest()
        for name in ARTIFACTS:
            record = manifest.get(name)
            if record is None:
                rows.append({"name": name, "status": "missing"})
                continue
            try:
                status = "ok" if self.get(name) is not None else "missing"
            except ArtifactIntegrityError:
                status = "corrupt"
            rows.append({**record, "status": status})
        return rows

    def clean(self) -> None:
        with self._lock:
            if os.path.isdir(self.directory):
                shutil.rmtree(self.directory)
                logger.info(f"Removed artifact cache {self.directory}")

    # -----------------------
    # Typed views
    # -----------------------
    def kempe_basis(self):
        from eightpoints.m8.kempe import KempeBasis

        return KempeBasis.loads(self.get_or_build(KEMPE_BINDING))

    def cubic(self) -> SparsePolynomial:
        return loads_polynomial(self.get_or_build(CUBIC))

    def quintic(self) -> SparsePolynomial:
        return loads_polynomial(self.get_or_build(QUINTIC))
