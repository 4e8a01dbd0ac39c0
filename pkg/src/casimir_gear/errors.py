"""Exception hierarchy for casimir-gear."""


class CasimirGearError(Exception):
    """Base class for all casimir-gear errors."""


class DomainError(CasimirGearError, ValueError):
    """Argument outside the mathematical domain (e.g. x <= 0)."""


class OrderRangeError(CasimirGearError, ValueError):
    """Bessel order outside the supported range."""


class GeometryError(CasimirGearError, ValueError):
    """Invalid geometry (e.g. radial ratio y <= 1)."""


class SingularPointError(CasimirGearError, ValueError):
    """Kernel requested exactly at a removable singular point (lambda = 0)."""


class InternalConsistencyError(CasimirGearError):
    """A quantity that is provably nonzero numerically degenerated."""


class QuadratureError(CasimirGearError):
    """Adaptive quadrature failed to converge within the subdivision budget.

    Attributes
    ----------
    estimate : float
        Best integral estimate at the time of failure.
    error : float
        Accompanying error estimate.
    """

    def __init__(self, message, estimate=float("nan"), error=float("inf")):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class ModeConvergenceError(CasimirGearError):
    """Mode sum not converged at the requested truncation order.

    Attributes
    ----------
    ratio : float
        Measured truncation ratio.
    tol : float
        Tolerance that was exceeded.
    partial : object
        Partial results computed before the failure (may be None).
    """

    def __init__(self, message, ratio=float("nan"), tol=float("nan"), partial=None):
        super().__init__(message)
        self.ratio = ratio
        self.tol = tol
        self.partial = partial
