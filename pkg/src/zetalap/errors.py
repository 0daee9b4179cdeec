"""Exception hierarchy shared by every module."""


class ZetalapError(Exception):
    """Base class for all library errors."""


class DomainError(ZetalapError, ValueError):
    """Argument outside the domain of the function."""


class PoleError(DomainError):
    """Argument sits on a pole of the function."""


class RangeError(ZetalapError, OverflowError):
    """Result is not representable as a finite binary64 number."""


class SingularityError(ZetalapError, ArithmeticError):
    """A denominator vanishes (G, nu or chi blow up)."""


class ZeroAdjacentError(ZetalapError, ArithmeticError):
    """Argument tracking collapsed next to a zero of zeta."""


class UnclassifiableError(ZetalapError, ArithmeticError):
    """Critical point of G with vanishing second derivative."""


class ConfigurationError(ZetalapError, ValueError):
    """Invalid configuration or numerical parameters."""


class ConvergenceError(ZetalapError, ArithmeticError):
    """An iterative procedure did not reach its tolerance."""
