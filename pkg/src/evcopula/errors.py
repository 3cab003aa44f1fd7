"""Exception hierarchy shared by all evcopula modules."""


class EvcopulaError(Exception):
    """Base class for all library-specific errors."""


class DomainError(EvcopulaError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ValidationError(EvcopulaError, ValueError):
    """A raw vertex list does not describe a Pickands dependence function."""


class NonIncreasingAbscissae(ValidationError):
    """Vertex abscissae are not strictly increasing (after sorting: duplicates)."""


class EnvelopeViolation(ValidationError):
    """Some ordinate leaves the band max(x, 1-x) <= y <= 1."""


class ConvexityViolation(ValidationError):
    """The chord-slope sequence decreases beyond tolerance."""


class SlopeOutOfRange(ValidationError):
    """Some chord slope leaves [-1, 1] beyond tolerance."""


class NoVertices(EvcopulaError, ValueError):
    """Operation requires at least one interior vertex."""


class AdmissibilityError(EvcopulaError, ValueError):
    """Requested insertion height lies outside the admissible interval."""


class NoConvergence(EvcopulaError, RuntimeError):
    """Interpolation refinement did not stabilize before the node cap."""


class NotComparable(EvcopulaError):
    """Neither function dominates the other pointwise."""


class BisectionFailure(EvcopulaError, RuntimeError):
    """Conditional-quantile bisection failed to close its bracket."""


class InsufficientData(EvcopulaError, ValueError):
    """Too few observations for the requested estimator."""
