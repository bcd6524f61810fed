"""Shared kinematics: constants, budgets, region tags, composite forces."""

from __future__ import annotations

import math

import pytest

from pfield import boxmode, oracle
from pfield.core import (
    BOHR_RADIUS,
    CODATA,
    ELECTRON_MASS,
    HBAR,
    PLANCK_H,
    DeBroglie,
    EnergyBudget,
    RegionClass,
    classical_limit_epsilon,
    classify_region,
    energy_budget_check,
    field_force_1d,
    kinetic_pf,
    pf_force_stationary,
)


def test_constants_consistent():
    assert HBAR == PLANCK_H / (2.0 * math.pi)
    assert BOHR_RADIUS == pytest.approx(5.29177210903e-11, rel=1e-9)
    assert CODATA.hbar == HBAR
    assert CODATA.electron_mass == ELECTRON_MASS
    assert CODATA.bohr_radius == BOHR_RADIUS


def test_debroglie_roundtrips():
    p = 3.7e-25
    d = DeBroglie.from_momentum(p)
    assert d.wavenumber == p / HBAR
    assert d.wavelength == pytest.approx(2.0 * math.pi * HBAR / p, rel=1e-14)
    d2 = DeBroglie.from_wavenumber(d.wavenumber)
    assert d2.momentum == pytest.approx(p, rel=1e-14)
    d3 = DeBroglie.from_wavelength(d.wavelength)
    assert d3.wavenumber == pytest.approx(d.wavenumber, rel=1e-14)
    assert d.kinetic_energy(ELECTRON_MASS) == pytest.approx(
        p**2 / (2.0 * ELECTRON_MASS), rel=1e-14)


@pytest.mark.parametrize("ctor,arg", [
    (DeBroglie.from_momentum, 0.0),
    (DeBroglie.from_wavenumber, -1.0),
    (DeBroglie.from_wavelength, 0.0),
])
def test_debroglie_rejects_nonpositive(ctor, arg):
    with pytest.raises(ValueError):
        ctor(arg)


def test_energy_budget_check_accepts_consistent_split():
    b = EnergyBudget(e_total=5.0, e_particle=3.0, e_field=2.0,
                     k_particle=3.0, v_particle=0.0,
                     k_field=0.5, v_field=1.5)
    assert energy_budget_check(b)


def test_energy_budget_check_rejects_broken_identity():
    b = EnergyBudget(e_total=5.0, e_particle=3.0, e_field=2.1,
                     k_particle=3.0, v_particle=0.0,
                     k_field=0.5, v_field=1.6)
    assert not energy_budget_check(b)


def test_energy_budget_check_rejects_negative_kinetic():
    b = EnergyBudget(e_total=1.0, e_particle=2.0, e_field=-1.0,
                     k_particle=2.0, v_particle=0.0,
                     k_field=-1.0, v_field=0.0)
    assert not energy_budget_check(b)


def test_classify_region_forbidden_wins_over_classical():
    # tiny e_field but e_field + k_particle < 0: still forbidden
    assert classify_region(-1e-30, 0.0, eps=1e-20) is RegionClass.FORBIDDEN
    assert classify_region(1e-30, 1.0, eps=1e-20) is RegionClass.CLASSICAL_LIMIT
    assert classify_region(0.5, 1.0, eps=1e-6) is RegionClass.ALLOWED
    assert classify_region(-0.5, 1.0, eps=1e-6) is RegionClass.ALLOWED


def test_classify_region_validates_inputs():
    with pytest.raises(ValueError):
        classify_region(1.0, 1.0, eps=0.0)
    with pytest.raises(ValueError):
        classify_region(math.nan, 1.0, eps=1e-6)
    with pytest.raises(ValueError):
        classify_region(1.0, math.inf, eps=1e-6)


def test_classical_limit_epsilon_scales_with_particle_energy():
    assert classical_limit_epsilon(2.0) == 2e-6
    assert classical_limit_epsilon(-2.0) == 2e-6


def _sine_mode():
    # electron in a 2 nm box, first level, p_n^2/p_P^2 = 1.5
    a = 2e-9
    p_n = HBAR * math.pi / a
    sys = boxmode.BoxSystem(m=ELECTRON_MASS, a=a,
                            p_particle=p_n / math.sqrt(1.5))
    return sys, boxmode.make_mode(sys, 1)


def test_field_force_reduces_to_stationary_form():
    """On intervals of fixed slope sign, f_F = sign(chi') (-m wbar^2 chi + f_P chi')."""
    sys, mode = _sine_mode()
    v_p = sys.p_particle / sys.m
    wbar = v_p * mode.k_n
    f_p = 3.1e-12
    worst = 0.0
    for i in range(1, 40):
        x = 0.5 * sys.a * i / 40.0     # cos(kx) > 0 throughout
        chi = boxmode.field_value(mode, x)
        chi_p = boxmode.field_slope(mode, x)
        d_abs = -mode.a_n * mode.k_n**2 * math.sin(mode.k_n * x)
        lhs = field_force_1d(sys.m, v_p, chi_p, d_abs, f_p)
        rhs = math.copysign(1.0, chi_p) * (-sys.m * wbar**2 * chi + f_p * chi_p)
        worst = max(worst, abs(lhs - rhs) / max(abs(rhs), 1e-300))
    assert worst <= 5e-15


def test_kinetic_pf_value_and_validation():
    assert kinetic_pf(2.0, 0.25) == 2.5
    assert kinetic_pf(2.0, 0.25, g=0.5) == 0.25 * 2.5
    with pytest.raises(ValueError):
        kinetic_pf(-1.0, 0.0)
    with pytest.raises(ValueError):
        kinetic_pf(1.0, -0.1)


def test_pf_force_matches_mode_acceleration():
    """The generic force formula reproduces the box closed form."""
    sys, mode = _sine_mode()
    v_p = sys.p_particle / sys.m
    for frac in (0.1, 0.22, 0.35, 0.43):
        x = frac * sys.a
        chi_p = boxmode.field_slope(mode, x)
        chi_pp = -mode.k_n**2 * boxmode.field_value(mode, x)
        f = pf_force_stationary(mode.g_npf, 0.0, chi_p, chi_pp, sys.m, v_p)
        assert f == pytest.approx(
            sys.m * boxmode.pf_acceleration(mode, x, v_p), rel=5e-15)


def test_pf_force_tracks_oracle_path_curvature():
    """m d^2q/dt^2 from the quadrature path converges to the force at O(h^2)."""
    sys, mode = _sine_mode()
    v_p = sys.p_particle / sys.m
    x = 0.25 * sys.a
    chi_p = boxmode.field_slope(mode, x)
    chi_pp = -mode.k_n**2 * boxmode.field_value(mode, x)
    f = pf_force_stationary(mode.g_npf, 0.0, chi_p, chi_pp, sys.m, v_p)

    def q(s: float) -> float:
        return oracle.exact_box_trajectory(mode, s)

    devs = []
    for h in (sys.a / 400.0, sys.a / 800.0):
        fd = sys.m * v_p**2 * oracle.finite_diff(q, x, h, order=2)
        devs.append(abs(fd - f) / abs(f))
    assert devs[1] <= 1e-5          # measured 4.99e-6 at h = a/800
    assert 3.5 <= devs[0] / devs[1] <= 4.5
