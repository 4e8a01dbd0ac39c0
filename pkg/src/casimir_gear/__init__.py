"""casimir-gear: Casimir interaction energy and torque for cylindrical gears.

Computes the dimensionless interaction energy F(y, beta) and torque
T(y, beta) between dielectric cogs and a perfectly conducting cylinder, for
an open gear with an external polarizable object and for a concentric
cylindrical gear, by evaluating Wick-rotated mode-sum integrals over
exponentially scaled modified Bessel kernels.
"""

__version__ = "0.1.0"

from .core import BACKEND
from .errors import (
    CasimirGearError,
    DomainError,
    GeometryError,
    InternalConsistencyError,
    ModeConvergenceError,
    OrderRangeError,
    QuadratureError,
    SingularPointError,
)
from .specfun import (
    MAX_ORDER,
    ScaledBesselValue,
    bessel_derivatives,
    bessel_i_scaled,
    bessel_k_scaled,
    scaled_bessel,
    wronskian_residual,
)
from .kernels import (
    KernelPoint,
    ModeFactor,
    concentric_rr_kernel,
    mode_factors,
    v1_factor,
    v2_factor,
)
from .quadrature import (
    CONCENTRIC,
    OPEN_GEAR,
    ModeSumSpec,
    QuadratureSpec,
    brute_force_triple,
    eta_integral,
    kz_profile,
    mode_sums,
)
from .scenarios import (
    GearScenario,
    SweepTable,
    dimensionless_energy,
    dimensionless_torque,
    physical_energy_torque,
    sweep,
)

__all__ = [
    "__version__",
    "BACKEND",
    "MAX_ORDER",
    "OPEN_GEAR",
    "CONCENTRIC",
    "CasimirGearError",
    "DomainError",
    "GeometryError",
    "InternalConsistencyError",
    "ModeConvergenceError",
    "OrderRangeError",
    "QuadratureError",
    "SingularPointError",
    "ScaledBesselValue",
    "bessel_k_scaled",
    "bessel_i_scaled",
    "bessel_derivatives",
    "wronskian_residual",
    "scaled_bessel",
    "KernelPoint",
    "ModeFactor",
    "v1_factor",
    "v2_factor",
    "mode_factors",
    "concentric_rr_kernel",
    "QuadratureSpec",
    "ModeSumSpec",
    "kz_profile",
    "mode_sums",
    "eta_integral",
    "brute_force_triple",
    "GearScenario",
    "SweepTable",
    "dimensionless_energy",
    "dimensionless_torque",
    "physical_energy_torque",
    "sweep",
]
