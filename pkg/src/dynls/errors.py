"""Exception types shared across the package."""


class DynlsError(Exception):
    """Base class for all package errors."""


class InvalidParameter(DynlsError):
    """A configuration value or argument is outside its allowed range."""


class DimensionMismatch(DynlsError):
    """Operands do not conform in shape."""


class SingularGram(DynlsError):
    """A Gram matrix is numerically singular (below the condition floor)."""


class NotOrthonormal(DynlsError):
    """Matrix columns are not orthonormal within tolerance."""


class NotSymmetric(DynlsError):
    """Matrix is not symmetric within tolerance."""


class RankDeficientInit(DynlsError):
    """Initial block fails the least-singular-value requirement."""


class HorizonExceeded(DynlsError):
    """More insertions than the configured stream horizon."""


class SingularAfterDelete(DynlsError):
    """Row deletion would make the retained Gram matrix singular."""


class EigenvalueOutOfRange(DynlsError):
    """Spectrum falls outside the range required by a construction."""


class SolverFailure(DynlsError):
    """An inner regression solver failed or returned an unusable answer."""


class ParseError(DynlsError):
    """Malformed input file; message carries the row/column location."""
