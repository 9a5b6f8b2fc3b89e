"""Exception hierarchy shared across the package."""


class K3HilbError(Exception):
    """Base class for every error raised by k3hilb."""


class InvalidInput(K3HilbError, ValueError):
    pass


class SquareRadicand(InvalidInput):
    """Raised when a Pell radicand is a perfect square."""


class UnsupportedN(InvalidInput):
    pass


class InvalidNorm(InvalidInput):
    """Raised when a unit-power is requested for a solution of norm other than +1/-1."""


class NotAnIsometry(InvalidInput):
    pass


class NotPrimitive(InvalidInput):
    pass


class NonPositiveSquare(InvalidInput):
    pass


class NotIntegral(K3HilbError):
    """The reflection in a class has non-integral matrix entries."""


class InternalInconsistency(K3HilbError, AssertionError):
    """Two independent computations disagreed; this is always a bug."""
