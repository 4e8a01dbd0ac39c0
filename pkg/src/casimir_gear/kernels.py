"""Euclidean mode kernels of the interaction-energy integrand.

Open gear (polarizable object at radius y = r/a outside a conducting
cylinder of radius a = 1): two bracket factors per mode,

  v1 (azimuthal / TE-like channel, odd in m):
      f1(m) = m kz^2/(lam^2 y) K_m(lam y)/K_m(lam)
            + m eta^2/lam^2    K'_m(lam y)/K'_m(lam)

  v2 (radial / TM-like channel, even in m):
      f2(m) = kz^2/lam          K'_m(lam y)/K_m(lam)
            + eta^2 m^2/(lam^3 y) K_m(lam y)/K'_m(lam)

with lam = sqrt(eta^2 + kz^2).  The interaction energy factorizes into
products f(m1, kz1) f(m2, kz2) at shared Euclidean frequency eta.

Concentric gear (inner cog on the cylinder surface r = 1, outer cog on the
inner face of a conducting shell at r = y = b/a): only the radial-radial
correlator survives the boundary conditions.  Both cogs sit on conductor
surfaces, so the radial Green's functions collapse through the Wronskian
into the cross-boundary denominators

  D_m(lam, y)  = I_m(lam) K_m(lam y)  - I_m(lam y) K_m(lam)     (< 0)
  D'_m(lam, y) = I'_m(lam) K'_m(lam y) - I'_m(lam y) K'_m(lam)  (> 0)

and the per-mode kernel is

  c(m) = eta^2 m^2 / (lam^4 y^2 D'_m) - kz^2 / (lam^2 y D_m)

(both terms positive).  All three kernels decay like exp(-lam (y-1)).
"""

import math
from dataclasses import dataclass

from .core import backend
from .errors import (
    GeometryError,
    InternalConsistencyError,
    OrderRangeError,
    SingularPointError,
)
from .specfun import MAX_ORDER

__all__ = [
    "KernelPoint",
    "ModeFactor",
    "v1_factor",
    "v2_factor",
    "mode_factors",
    "concentric_rr_kernel",
]


@dataclass(frozen=True)
class KernelPoint:
    """One (mode, Euclidean frequency, axial wavenumber, radial ratio) node.

    Units are fixed by the cylinder radius (a = 1): eta and kz carry 1/length
    in those units, y is the radial ratio r/a (open gear) or b/a (concentric).
    """

    m: int
    eta: float
    kz: float
    y: float

    def __post_init__(self):
        if not (self.y > 1.0):
            raise GeometryError(
                f"radial ratio must satisfy y > 1 (y = 1 is contact), got {self.y!r}"
            )
        if abs(self.m) > MAX_ORDER:
            raise OrderRangeError(f"mode order |m|={abs(self.m)} exceeds {MAX_ORDER}")

    @property
    def lam(self):
        """Euclidean radial wavenumber sqrt(eta^2 + kz^2)."""
        return math.sqrt(self.eta * self.eta + self.kz * self.kz)


@dataclass(frozen=True)
class ModeFactor:
    """The two open-gear bracket values at one kernel point."""

    te_like: float  # v1 bracket, odd in m
    tm_like: float  # v2 bracket, even in m


def _checked(p):
    if p.eta == 0.0 and p.kz == 0.0:
        raise SingularPointError(
            "lambda = 0 is a removable singular point; quadrature nodes never land here"
        )
    return abs(p.m)


def v1_factor(p):
    """Azimuthal-channel bracket; odd under m -> -m (exactly, by symmetry fold)."""
    ma = _checked(p)
    f1, _ = backend.open_brackets(ma, p.eta, p.kz, p.y)
    return -f1[ma] if p.m < 0 else f1[ma]


def v2_factor(p):
    """Radial-channel bracket; even under m -> -m."""
    ma = _checked(p)
    _, f2 = backend.open_brackets(ma, p.eta, p.kz, p.y)
    return f2[ma]


def mode_factors(p):
    """Both open-gear brackets at once."""
    ma = _checked(p)
    f1, f2 = backend.open_brackets(ma, p.eta, p.kz, p.y)
    v1 = -f1[ma] if p.m < 0 else f1[ma]
    return ModeFactor(te_like=v1, tm_like=f2[ma])


def concentric_rr_kernel(p):
    """Concentric surface-to-surface radial kernel; even under m -> -m."""
    ma = _checked(p)
    c = backend.conc_brackets(ma, p.eta, p.kz, p.y)
    val = c[ma]
    if not math.isfinite(val):
        # D_m, D'_m are provably nonzero for lam > 0, y > 1; reaching this
        # means the evaluation chain degenerated (e.g. far outside the
        # supported order/argument envelope).
        raise InternalConsistencyError(
            f"concentric kernel degenerated at m={p.m}, eta={p.eta}, kz={p.kz}, y={p.y}"
        )
    return val
