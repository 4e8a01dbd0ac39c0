"""Gear geometries and the physical energy/torque contracts.

A scenario is a gear (conducting cylinder with polarizable surface cogs)
probed by one external polarizable object:

* ``open-gear``: cogs on the cylinder surface (radius a = 1), probe at
  radial ratio y = r/a, relative angle beta.
* ``concentric``: cogs on the inner cylinder surface, probe cog on the
  inner face of a concentric conducting shell at y = b/a.

Multi-cog energies superpose single-pair energies over the listed cog
angles: F_N(y, beta) = sum_k F_1(y, beta + theta_k).  Cog-cog pairs on the
same surface are beta-independent and carry no torque, so they are not
included.  Physical outputs restore the polarizability product and the
a^-7 dimension:

    energy = alpha1*alpha2 / (4 a^7) * F(y, beta)
    torque = alpha1*alpha2 / (4 a^7) * T(y, beta)

with the sign convention T = -dF/dbeta (torque drives beta toward the
energy minimum at alignment).
"""

import math
import time
from dataclasses import dataclass, field

from . import __version__
from .errors import GeometryError, ModeConvergenceError
from .quadrature import (
    CONCENTRIC,
    OPEN_GEAR,
    ModeSumSpec,
    QuadratureSpec,
    get_engine,
)

__all__ = [
    "GearScenario",
    "SweepTable",
    "dimensionless_energy",
    "dimensionless_torque",
    "physical_energy_torque",
    "sweep",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class GearScenario:
    """Geometry and physics configuration for one gear problem."""

    kind: str = OPEN_GEAR
    y: float = 5.0
    cog_angles: tuple = (0.0,)
    alpha_product: float = None
    a: float = None
    mode_spec: ModeSumSpec = field(default_factory=ModeSumSpec)
    quad_spec: QuadratureSpec = field(default_factory=QuadratureSpec)

    def __post_init__(self):
        if self.kind not in (OPEN_GEAR, CONCENTRIC):
            raise ValueError(f"kind must be {OPEN_GEAR!r} or {CONCENTRIC!r}")
        if not (self.y > 1.0):
            raise GeometryError(f"radial ratio must satisfy y > 1, got {self.y!r}")
        angles = tuple(float(t) for t in self.cog_angles)
        if not angles:
            raise ValueError("cog_angles must be nonempty")
        folded = sorted(t % _TWO_PI for t in angles)
        for i in range(1, len(folded)):
            if abs(folded[i] - folded[i - 1]) < 1e-12:
                raise ValueError("cog_angles must be distinct modulo 2*pi")
        object.__setattr__(self, "cog_angles", angles)
        if self.alpha_product is not None and self.alpha_product < 0.0:
            raise ValueError("alpha_product must be >= 0")
        if self.a is not None and not (self.a > 0.0):
            raise ValueError("cylinder radius a must be positive")

    def engine(self):
        m_top = self.mode_spec.m_max + (1 if self.mode_spec.convergence_check else 0)
        return get_engine(self.kind, self.y, m_top, self.quad_spec)


@dataclass(frozen=True)
class SweepTable:
    """Rows of (beta, F, T) plus the metadata echoed into CSV headers."""

    rows: tuple  # of (beta, F, T)
    metadata: dict

    def __post_init__(self):
        betas = [r[0] for r in self.rows]
        if any(b2 <= b1 for b1, b2 in zip(betas, betas[1:])):
            raise ValueError("beta grid must be strictly increasing")


def _superpose(scenario, beta, fn, m_max):
    return sum(fn(beta + theta, m_max) for theta in scenario.cog_angles)


def _certified_pair(scenario, beta, eng):
    """(F, T) at m_max, certified point-locally against the m_max + 1 run.

    Sweeps certify rows against the largest |F|, |T| on their grid instead,
    which tolerates the symmetry zeros near beta = pi; a single-point call
    has only its own magnitude to stand on.
    """
    ms = scenario.mode_spec
    f = _superpose(scenario, beta, eng.energy, ms.m_max)
    t = _superpose(scenario, beta, eng.torque, ms.m_max)
    if ms.convergence_check:
        f_up = _superpose(scenario, beta, eng.energy, ms.m_max + 1)
        ratio = abs(f_up - f) / max(abs(f), abs(f_up), 1e-300)
        if ratio > ms.rel_tol:
            raise ModeConvergenceError(
                f"mode sum not converged at m_max={ms.m_max} "
                f"(beta={beta:.6g}: truncation ratio {ratio:.3e} > "
                f"{ms.rel_tol:.1e}); increase m_max",
                ratio=ratio, tol=ms.rel_tol,
            )
    return f, t


def dimensionless_energy(scenario, beta, threads=1):
    """F(y, beta) summed over the scenario's cog angles."""
    eng = scenario.engine().build(threads)
    f, _ = _certified_pair(scenario, beta, eng)
    return f


def dimensionless_torque(scenario, beta, threads=1):
    """T(y, beta) = -dF/dbeta, analytic (mode-weighted series), superposed."""
    eng = scenario.engine().build(threads)
    _, t = _certified_pair(scenario, beta, eng)
    return t


def physical_energy_torque(scenario, beta, threads=1):
    """(energy, torque) in physical units alpha1*alpha2 / (4 a^7) * (F, T)."""
    if scenario.alpha_product is None or scenario.a is None:
        raise ValueError("physical outputs need both alpha_product and a")
    eng = scenario.engine().build(threads)
    f, t = _certified_pair(scenario, beta, eng)
    pref = scenario.alpha_product / (4.0 * scenario.a ** 7)
    return pref * f, pref * t


def sweep(scenario, beta_grid, threads=0):
    """Evaluate (beta, F, T) over a strictly increasing beta grid.

    The profile cache and eta node set are shared across all rows (and all
    cog angles), so the grid cost is dominated by the one-time engine
    build.  Every row is certified against the m_max + 1 truncation; a
    failing row aborts with the partial table attached to the error.
    """
    betas = [float(b) for b in beta_grid]
    if not betas:
        raise ValueError("beta grid must be nonempty")
    if any(b2 <= b1 for b1, b2 in zip(betas, betas[1:])):
        raise ValueError("beta grid must be strictly increasing")
    if threads <= 0:
        import os
        threads = min(os.cpu_count() or 1, 8)
    t0 = time.perf_counter()
    eng = scenario.engine().build(threads)
    ms = scenario.mode_spec
    # certification scales: largest |F|, |T| on the grid at m_max
    raw = []
    scale_f = 0.0
    scale_t = 0.0
    for b in betas:
        f = _superpose(scenario, b, eng.energy, ms.m_max)
        t = _superpose(scenario, b, eng.torque, ms.m_max)
        raw.append((f, t))
        scale_f = max(scale_f, abs(f))
        scale_t = max(scale_t, abs(t))
    rows = []
    failures = []
    if ms.convergence_check:
        for b, (f, t) in zip(betas, raw):
            f_up = _superpose(scenario, b, eng.energy, ms.m_max + 1)
            t_up = _superpose(scenario, b, eng.torque, ms.m_max + 1)
            rf = abs(f_up - f) / scale_f
            rt = abs(t_up - t) / scale_t if scale_t > 0.0 else 0.0
            if max(rf, rt) > ms.rel_tol:
                failures.append((b, max(rf, rt)))
            rows.append((b, f, t))
    else:
        rows = [(b, f, t) for b, (f, t) in zip(betas, raw)]
    metadata = {
        "version": __version__,
        "kind": scenario.kind,
        "y": scenario.y,
        "cog_angles": scenario.cog_angles,
        "m_max": ms.m_max,
        "rel_tol": scenario.quad_spec.rel_tol,
        "mode_rel_tol": ms.rel_tol,
        "alpha_product": scenario.alpha_product,
        "a": scenario.a,
        "wall_time_s": time.perf_counter() - t0,
        "max_quad_error": eng.quad_error,
        "rows": len(rows),
    }
    table = SweepTable(rows=tuple(rows), metadata=metadata)
    if failures:
        worst = max(failures, key=lambda x: x[1])
        raise ModeConvergenceError(
            f"{len(failures)} of {len(rows)} rows failed the m_max={ms.m_max} "
            f"truncation check (worst ratio {worst[1]:.3e} at beta="
            f"{worst[0]:.6g}); increase m_max",
            ratio=worst[1], tol=ms.rel_tol, partial=table,
        )
    return table
