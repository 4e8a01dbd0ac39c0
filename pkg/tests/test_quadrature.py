"""Profiles, mode sums, the factorized eta integral, and the 3-D oracle.

Frozen reference values come from an independent adaptive-quadrature
pipeline built on a different Bessel implementation (library routines),
run before this package was written.
"""

import math

import pytest

from casimir_gear import (
    CONCENTRIC,
    OPEN_GEAR,
    ModeSumSpec,
    QuadratureSpec,
    brute_force_triple,
    eta_integral,
    kz_profile,
    mode_sums,
)
from casimir_gear.errors import ModeConvergenceError, QuadratureError
from casimir_gear.quadrature import default_lambda_cutoff, get_engine

NOCHECK = ModeSumSpec(convergence_check=False)


def ms(m_max, check=False):
    return ModeSumSpec(m_max=m_max, convergence_check=check)


# ---- kz_profile -------------------------------------------------------


def test_profile_v1_zero_at_m0():
    for eta in [0.0, 0.5, 3.0]:
        assert kz_profile(0, eta, 5.0, "V1-bracket") == 0.0


def test_profile_reference_values():
    # independent-pipeline values at (m=1, eta=1, y=5)
    p2 = kz_profile(1, 1.0, 5.0, "V2-bracket")
    assert abs(p2 - (-0.0005442136244709486)) / 0.0005442136244709486 < 1e-9
    p1 = kz_profile(1, 1.0, 5.0, "V1-bracket")
    assert abs(p1 - 0.0008661191184034198) / 0.0008661191184034198 < 1e-9


def test_profile_odd_in_m():
    assert kz_profile(-2, 0.7, 4.0, "V1") == -kz_profile(2, 0.7, 4.0, "V1")
    assert kz_profile(-2, 0.7, 4.0, "V2") == kz_profile(2, 0.7, 4.0, "V2")


def test_profile_cutoff_doubling():
    """Doubling the lambda cutoff moves the profile by less than abs_tol."""
    spec = QuadratureSpec()

    def doubled(y, m):
        return 2.0 * default_lambda_cutoff(y, m)

    spec2 = QuadratureSpec(cutoff_policy=doubled)
    for m, eta, which in [(1, 0.5, "V2-bracket"), (3, 1.0, "V1-bracket"),
                          (0, 0.2, "concentric")]:
        a = kz_profile(m, eta, 3.0, which, spec)
        b = kz_profile(m, eta, 3.0, which, spec2)
        assert abs(a - b) < spec.abs_tol


def test_profile_beyond_cutoff_is_zero():
    spec = QuadratureSpec()
    eta = default_lambda_cutoff(5.0, 2) * 1.01
    assert kz_profile(2, eta, 5.0, "V2-bracket", spec) == 0.0


def test_profile_bad_channel():
    with pytest.raises(ValueError):
        kz_profile(1, 1.0, 5.0, "V3-bracket")


def test_quadrature_error_carries_estimate():
    # near-contact geometry at machine-precision tolerance with a budget
    # of one split cannot converge
    spec = QuadratureSpec(rel_tol=1e-15, abs_tol=1e-300, max_subdivisions=1)
    with pytest.raises(QuadratureError) as exc:
        kz_profile(0, 0.01, 1.2, "V2-bracket", spec)
    assert math.isfinite(exc.value.error)
    assert math.isfinite(exc.value.estimate)
    assert exc.value.error > 0.0


# ---- mode_sums --------------------------------------------------------


def test_mode_sums_reference_pair():
    s1, s2 = mode_sums(1.0, math.pi / 4.0, 10.0, ms(6))
    assert abs(s1 - 7.544771076575644e-06) / 7.544771076575644e-06 < 1e-9
    assert abs(s2 - (-1.2472550113209406e-06)) / 1.2472550113209406e-06 < 1e-9


def test_mode_sums_beta_zero_kills_s1():
    s1, _ = mode_sums(1.0, 0.0, 5.0, ms(6))
    assert s1 == 0.0


def test_mode_sums_beta_parity():
    s1p, s2p = mode_sums(0.8, 1.1, 5.0, ms(5))
    s1m, s2m = mode_sums(0.8, -1.1, 5.0, ms(5))
    assert s1m == pytest.approx(-s1p, rel=1e-13)
    assert s2m == pytest.approx(s2p, rel=1e-13)


def test_mode_sums_match_double_sum_oracle():
    """Direct double sum over signed m in [-M, M] with the complex phase."""
    M, eta, beta, y = 6, 1.0, math.pi / 4.0, 10.0
    p1 = [kz_profile(m, eta, y, "V1-bracket") for m in range(M + 1)]
    p2 = [kz_profile(m, eta, y, "V2-bracket") for m in range(M + 1)]
    z1 = complex(0.0)
    z2 = complex(0.0)
    for m in range(-M, M + 1):
        phase = complex(math.cos(m * beta), math.sin(m * beta))
        sgn = -1.0 if m < 0 else 1.0
        z1 += phase * (sgn * p1[abs(m)])
        z2 += phase * p2[abs(m)]
    assert abs(z1.real) < 1e-18 and abs(z2.imag) < 1e-18  # parity fold
    s1, s2 = mode_sums(eta, beta, y, ms(M))
    assert s1 == pytest.approx(z1.imag, rel=1e-12)
    assert s2 == pytest.approx(z2.real, rel=1e-12)


def test_mode_sums_concentric_s1_zero():
    s1, s2 = mode_sums(0.5, 1.0, 3.0, ms(6), kind=CONCENTRIC)
    assert s1 == 0.0
    assert s2 != 0.0


# ---- eta_integral -----------------------------------------------------


def test_energy_reference_values():
    # independent-pipeline (nested adaptive quadrature) references
    f5 = eta_integral(1.0, 5.0, NOCHECK)
    assert abs(f5 - (-2.1474885363045428e-06)) / 2.1474885363045428e-06 < 1e-7
    f10 = eta_integral(1.0, 10.0, NOCHECK)
    assert abs(f10 - (-1.9662092876633672e-08)) / 1.9662092876633672e-08 < 1e-7


def test_energy_concentric_reference():
    f = eta_integral(1.0, 3.0, ms(6), kind=CONCENTRIC)
    assert abs(f - (-2.9394663105571067e-05)) / 2.9394663105571067e-05 < 1e-7
    f0 = eta_integral(0.0, 3.0, ms(6), kind=CONCENTRIC)
    assert abs(f0 - (-0.002985938841961733)) / 0.002985938841961733 < 1e-7


def test_energy_even_and_periodic_in_beta():
    f1 = eta_integral(0.9, 5.0, NOCHECK)
    assert eta_integral(-0.9, 5.0, NOCHECK) == pytest.approx(f1, rel=1e-12)
    assert eta_integral(0.9 + 2.0 * math.pi, 5.0, NOCHECK) == pytest.approx(f1, rel=1e-12)


def test_energy_negative_everywhere():
    for y in [1.5, 3.0, 5.0, 10.0]:
        for beta in [0.0, 0.7, 1.6, 2.8, math.pi]:
            assert eta_integral(beta, y, NOCHECK) < 0.0


def test_mode_convergence_flags_small_y():
    with pytest.raises(ModeConvergenceError) as exc:
        # y close to contact at the 6-mode default: truncation is ~30%
        eta_integral(2.5, 1.5, ModeSumSpec(m_max=6))
    assert exc.value.ratio > exc.value.tol


def test_mode_convergence_passes_paper_settings():
    assert eta_integral(1.0, 5.0, ModeSumSpec(m_max=6)) < 0.0
    assert eta_integral(1.0, 10.0, ModeSumSpec(m_max=6)) < 0.0


# ---- brute-force oracle -----------------------------------------------


def test_factorized_matches_brute_force_small():
    """m_max = 1: the two routes agree tightly."""
    b = brute_force_triple(1.0, 5.0, ms(1), n=48)
    f = eta_integral(1.0, 5.0, ms(1))
    assert abs(b - f) / abs(f) < 1e-6


def test_factorized_matches_brute_force_reference_point():
    b = brute_force_triple(1.0, 5.0, ms(3), n=48)
    f = eta_integral(1.0, 5.0, ms(3))
    assert abs(b - f) / abs(f) < 1e-3


def test_brute_force_even_in_beta():
    a = brute_force_triple(0.8, 4.0, ms(2), n=32)
    b = brute_force_triple(-0.8, 4.0, ms(2), n=32)
    assert a == pytest.approx(b, rel=1e-12)


# ---- sign structure ----------------------------------------------------


def test_channel_magnitudes_beta_averaged():
    """The even (radial) channel dominates the odd one on the beta average."""
    for y in [3.0, 5.0, 10.0]:
        eng = get_engine(OPEN_GEAR, y, 6, QuadratureSpec())
        eng.build()
        p1, p2 = eng._p1, eng._p2
        w = eng.weights
        n = 24
        avg1 = 0.0
        avg2 = 0.0
        for k in range(n):
            beta = 2.0 * math.pi * k / n
            i1 = 0.0
            i2 = 0.0
            for i, wi in enumerate(w):
                s1 = sum(2.0 * math.sin(m * beta) * p1[m][i] for m in range(1, 7))
                s2 = p2[0][i] + sum(2.0 * math.cos(m * beta) * p2[m][i] for m in range(1, 7))
                i1 += wi * s1 * s1
                i2 += wi * s2 * s2
            avg1 += i1 / n
            avg2 += i2 / n
        assert avg2 > avg1


def test_per_mode_profile_magnitudes():
    """Mode for mode, the odd-channel profile stays below the even one
    in the frequency region that carries the energy integral."""
    for y in [3.0, 5.0, 10.0]:
        for m in range(1, 7):
            for eta_frac in [0.1, 0.3, 0.6]:
                eta = eta_frac / (y - 1.0)
                p1 = kz_profile(m, eta, y, "V1-bracket")
                p2 = kz_profile(m, eta, y, "V2-bracket")
                assert abs(p1) < abs(p2)


def test_order_caps():
    from casimir_gear.errors import OrderRangeError

    with pytest.raises(OrderRangeError):
        kz_profile(65, 1.0, 5.0, "V2-bracket")
    with pytest.raises(ValueError):
        ModeSumSpec(m_max=63)
    # the largest supported truncation still instantiates
    ModeSumSpec(m_max=62)
