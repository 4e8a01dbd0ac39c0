"""Exponentially scaled modified Bessel functions of integer order.

Public surface over the numerical core backend.  All values are scaled,

    bessel_k_scaled(m, x) = e^x  K_m(x)
    bessel_i_scaled(m, x) = e^-x I_m(x)

which keeps every quantity in this package inside the double range: the
downstream kernels only ever need ratios such as K_m(lam*y)/K_m(lam)
together with an explicit exp(-lam*(y-1)) factor.

Negative orders are folded by the integer-order symmetry
K_{-m} = K_m, I_{-m} = I_m.  Supported orders are |m| <= 64 (the mode sums
in this package stay below ~20 even for radial ratios close to 1).
"""

from dataclasses import dataclass

from .core import backend
from .errors import DomainError, OrderRangeError

MAX_ORDER = 64

__all__ = [
    "MAX_ORDER",
    "ScaledBesselValue",
    "bessel_k_scaled",
    "bessel_i_scaled",
    "bessel_derivatives",
    "wronskian_residual",
    "scaled_bessel",
]


def _check(m, x):
    if not (x > 0.0):
        raise DomainError(f"argument must be positive, got x={x!r}")
    ma = abs(int(m))
    if ma > MAX_ORDER:
        raise OrderRangeError(f"order |m|={ma} exceeds supported maximum {MAX_ORDER}")
    return ma


def bessel_k_scaled(m, x):
    """e^x K_m(x) for integer m (|m| <= 64) and real x > 0.

    Relative accuracy is ~1e-14 across x in [1e-3, 700]; the scaling makes
    the result representable where the unscaled K_m would underflow.
    """
    ma = _check(m, x)
    return backend.kv_seq(ma, x)[ma]


def bessel_i_scaled(m, x):
    """e^-x I_m(x) for integer m (|m| <= 64) and real x > 0."""
    ma = _check(m, x)
    return backend.iv_seq(ma, x)[ma]


def bessel_derivatives(m, x):
    """(e^x K'_m(x), e^-x I'_m(x)) via the neighbor recurrences.

    K'_m = -(K_{m-1} + K_{m+1})/2 and I'_m = (I_{m-1} + I_{m+1})/2, with
    the m = 0 case reducing to K'_0 = -K_1, I'_0 = I_1.
    """
    ma = _check(m, x)
    kv = backend.kv_seq(ma + 1, x)
    iv = backend.iv_seq(ma + 1, x)
    lo = 1 if ma == 0 else ma - 1
    kp = -0.5 * (kv[lo] + kv[ma + 1])
    ip = 0.5 * (iv[lo] + iv[ma + 1])
    return kp, ip


def wronskian_residual(m, x):
    """|I_m(x) K'_m(x) - I'_m(x) K_m(x) + 1/x|, computed from scaled values.

    The exponential scalings cancel in the products, so this is an exact
    identity check on the full evaluation chain; it should sit at the
    rounding floor (~1e-15 relative to the 1/x scale).
    """
    ma = _check(m, x)
    kv = backend.kv_seq(ma + 1, x)
    iv = backend.iv_seq(ma + 1, x)
    lo = 1 if ma == 0 else ma - 1
    kp = -0.5 * (kv[lo] + kv[ma + 1])
    ip = 0.5 * (iv[lo] + iv[ma + 1])
    return abs(iv[ma] * kp - ip * kv[ma] + 1.0 / x)


@dataclass(frozen=True)
class ScaledBesselValue:
    """All four scaled values at one (order, argument) pair.

    Attributes
    ----------
    order : int
        Non-negative order after symmetry folding.
    argument : float
        Argument x > 0.
    k_scaled, i_scaled : float
        e^x K_m(x) and e^-x I_m(x).
    kp_scaled, ip_scaled : float
        e^x K'_m(x) and e^-x I'_m(x).
    """

    order: int
    argument: float
    k_scaled: float
    i_scaled: float
    kp_scaled: float
    ip_scaled: float


def scaled_bessel(m, x):
    """Evaluate a full :class:`ScaledBesselValue` at (m, x)."""
    ma = _check(m, x)
    kv = backend.kv_seq(ma + 1, x)
    iv = backend.iv_seq(ma + 1, x)
    lo = 1 if ma == 0 else ma - 1
    kp = -0.5 * (kv[lo] + kv[ma + 1])
    ip = 0.5 * (iv[lo] + iv[ma + 1])
    return ScaledBesselValue(ma, x, kv[ma], iv[ma], kp, ip)
