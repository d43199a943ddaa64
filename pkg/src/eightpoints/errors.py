"""Exception hierarchy shared by every module."""


class EightPointsError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(EightPointsError, RuntimeError):
    """Invalid environment or run configuration."""


class VariableMismatchError(EightPointsError, ValueError):
    """Polynomials over different variable lists were combined, or a variable is unknown."""


class MissingAssignmentError(EightPointsError, KeyError):
    """A polynomial was evaluated without a value for one of its variables."""


class ZeroInvariantError(EightPointsError, ValueError):
    """A tableau column repeats an entry, so the invariant is identically zero."""


class DimensionMismatchError(EightPointsError, ValueError):
    """Shapes of tableaux, configurations or matrices do not fit together."""


class DegenerateSampleError(EightPointsError, RuntimeError):
    """A rejection or resampling budget was exhausted."""


class SingularSystemError(EightPointsError, ZeroDivisionError):
    """A triangular system has a zero on its diagonal."""


class RepeatedNodeError(EightPointsError, ValueError):
    """Interpolation nodes are not pairwise distinct."""


class NonIntegralMultiplicityError(EightPointsError, ArithmeticError):
    """A character decomposition produced a non-integral multiplicity."""


class BindingNotFoundError(EightPointsError, RuntimeError):
    """No labelling of the non-crossing matchings satisfies the cubic's constraints."""


class ArtifactIntegrityError(EightPointsError, IOError):
    """A cached artifact does not match its recorded checksum."""


class UnknownClaimError(EightPointsError, KeyError):
    """A claim id is not present in the registry."""


class InconsistentSystemError(EightPointsError, ArithmeticError):
    """An overdetermined exact system has no solution."""
