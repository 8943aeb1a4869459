"""Exception types shared across the package."""


class PolysectError(Exception):
    """Base class for all package-specific errors."""


class ZeroVector(PolysectError):
    """Raised when a direction vector has (near-)zero norm after projection."""


class DimensionMismatch(PolysectError):
    """Raised when a coordinate vector has the wrong length for a body."""


class DimensionOutOfRange(PolysectError):
    """Raised when a body dimension is outside the supported range."""


class Unsupported(PolysectError):
    """Raised for queries outside the implemented scope (body, size, ...)."""


class RegimeViolation(PolysectError):
    """Raised when a closed form is evaluated outside its validity regime."""


class NotIntegrable(PolysectError):
    """Raised when an improper integral does not converge absolutely."""


class QuadratureFailure(PolysectError):
    """Raised when a quadrature cannot reach the requested tolerance."""


class InsufficientHits(PolysectError):
    """Raised when a Monte Carlo slab estimate has too few hits to be usable."""


class NotCritical(PolysectError):
    """Raised when a point fails the first-order criticality residual test."""


class NoFlipFound(PolysectError):
    """Raised when a threshold scan finds no classification change."""


class DomainError(PolysectError):
    """Raised when a formula is evaluated at or beyond a pole of its domain."""


class UnknownSuite(PolysectError):
    """Raised for an unrecognized verification suite id."""


class UnknownId(PolysectError):
    """Raised for an unrecognized counterexample id."""


class ResourceLimit(PolysectError):
    """Raised when a request exceeds the supported problem size."""
