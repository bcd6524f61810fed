"""Superpositions in the box: flux, continuity, norms, and momentum moments."""

from __future__ import annotations

import math

import pytest

from pfield import boxmode, oracle, timedep
from pfield.core import ELECTRON_MASS, HBAR

M = ELECTRON_MASS
A_BOX = 2e-9


def _bare_sys() -> boxmode.BoxSystem:
    return boxmode.BoxSystem(m=M, a=A_BOX, p_particle=HBAR * math.pi / A_BOX)


def _beat() -> timedep.Superposition:
    m1 = timedep.bare_eigenmode(M, A_BOX, 1)
    m2 = timedep.bare_eigenmode(M, A_BOX, 2)
    return timedep.Superposition.from_modes(_bare_sys(), ((m1, 1.0), (m2, 1.0)))


def _beat_period(s: timedep.Superposition) -> float:
    return 2.0 * math.pi * HBAR / (s.energies[1] - s.energies[0])


def test_bare_eigenmode_has_no_field_share():
    mode = timedep.bare_eigenmode(M, A_BOX, 3)
    assert mode.b_sq == 0.0
    assert mode.a_n == 0.0
    assert mode.g_npf == 1.0
    assert mode.e_n == pytest.approx(
        (HBAR * 3.0 * math.pi / A_BOX)**2 / (2.0 * M), rel=1e-13)


def test_from_modes_normalizes_and_defaults():
    s = _beat()
    assert s.coefficient_norm_sq() == pytest.approx(1.0, rel=1e-14)
    assert s.energies == (s.components[0][0].e_n, s.components[1][0].e_n)
    with pytest.raises(ValueError):
        timedep.Superposition.from_modes(_bare_sys(), ())
    mode = timedep.bare_eigenmode(M, A_BOX, 1)
    with pytest.raises(ValueError):
        timedep.Superposition.from_modes(_bare_sys(), ((mode, 0.0),))
    with pytest.raises(ValueError):
        timedep.Superposition(m=M, a=A_BOX,
                              components=((mode, 1.0 + 0j),), energies=())


def test_value_walls_and_domain():
    s = _beat()
    t = 1e-15
    assert s.value(0.0, t) == 0.0
    assert abs(s.value(A_BOX, t)) <= 1e-12 * math.sqrt(2.0 / A_BOX)
    with pytest.raises(ValueError):
        s.value(-0.1 * A_BOX, t)
    with pytest.raises(ValueError):
        s.d_dx(1.1 * A_BOX, t)


def _fd_complex(f, x0: float, h: float, order: int) -> complex:
    re = oracle.finite_diff(lambda u: f(u).real, x0, h, order)
    im = oracle.finite_diff(lambda u: f(u).imag, x0, h, order)
    return complex(re, im)


def test_derivatives_match_finite_differences():
    s = _beat()
    x, t = 0.3 * A_BOX, 0.8e-15
    hx, ht = A_BOX * 1e-5, 1e-20
    d1 = s.d_dx(x, t)
    assert abs(d1 - _fd_complex(lambda u: s.value(u, t), x, hx, 1)) \
        <= 1e-7 * abs(d1)
    d2 = s.d2_dx2(x, t)
    assert abs(d2 - _fd_complex(lambda u: s.value(u, t), x, hx, 2)) \
        <= 1e-5 * abs(d2)
    dt = s.d_dt(x, t)
    assert abs(dt - _fd_complex(lambda u: s.value(x, u), t, ht, 1)) \
        <= 1e-7 * abs(dt)


def test_plane_wave_flux_and_tdse():
    pw = timedep.PlaneWave(k=1e9, m=M)
    x, t = 1.3e-10, 2e-16
    assert timedep.density(pw, x, t) == pytest.approx(1.0, rel=1e-14)
    assert timedep.flux(pw, x, t) == pytest.approx(HBAR * 1e9 / M, rel=1e-12)
    e_k = (HBAR * 1e9)**2 / (2.0 * M)
    assert abs(timedep.tdse_residual(pw, x, t)) <= 1e-12 * e_k


def test_stationary_state_carries_no_flux():
    mode = timedep.bare_eigenmode(M, A_BOX, 1)
    s = timedep.Superposition.from_modes(_bare_sys(), ((mode, 1.0),))
    scale = HBAR * mode.k_n / (M * A_BOX)
    for x in (0.2 * A_BOX, 0.5 * A_BOX, 0.9 * A_BOX):
        assert abs(timedep.flux(s, x, 1e-15)) <= 1e-15 * scale


def test_continuity_residual_small_and_second_order():
    s = _beat()
    t = 0.1 * _beat_period(s)
    k2 = s.components[1][0].k_n
    h_x = A_BOX / 1e4
    h_t = h_x * M / (HBAR * k2)
    x = 0.3 * A_BOX
    res = timedep.continuity_residual(s, x, t, h_x, h_t)
    # compare against the local density-rate scale
    rate = abs(2.0 * (s.value(x, t).conjugate() * s.d_dt(x, t)).real)
    assert abs(res) <= 1e-5 * rate
    finer = timedep.continuity_residual(s, x, t, h_x / 2.0, h_t / 2.0)
    assert 3.5 <= abs(res / finer) <= 4.5


def test_continuity_residual_validation():
    s = _beat()
    with pytest.raises(ValueError):
        timedep.continuity_residual(s, 0.0, 1e-15, A_BOX / 100.0, 1e-18)
    with pytest.raises(ValueError):
        timedep.continuity_residual(s, 0.3 * A_BOX, 1e-15, -1e-12, 1e-18)
    with pytest.raises(ValueError):
        timedep.continuity_residual(s, 0.3 * A_BOX, 1e-15, 1e-12, 0.0)


def test_norm_is_one_and_conserved():
    s = _beat()
    period = _beat_period(s)
    norms = [timedep.norm(s, f * period) for f in (0.0, 0.37, 0.81)]
    for v in norms:
        assert v == pytest.approx(1.0, rel=1e-10)
    assert max(norms) - min(norms) <= 1e-10


def test_expectation_p_single_mode_vanishes():
    mode = timedep.bare_eigenmode(M, A_BOX, 1)
    s = timedep.Superposition.from_modes(_bare_sys(), ((mode, 1.0),))
    assert abs(timedep.expectation_p(s, 0.7e-15)) <= 1e-12 * HBAR * mode.k_n


def test_expectation_p2_is_coefficient_weighted():
    mode = timedep.bare_eigenmode(M, A_BOX, 1)
    s = timedep.Superposition.from_modes(_bare_sys(), ((mode, 1.0),))
    assert timedep.expectation_p2(s, 0.0) == pytest.approx(
        (HBAR * mode.k_n)**2, rel=1e-10)
    beat = _beat()
    k1 = beat.components[0][0].k_n
    k2 = beat.components[1][0].k_n
    target = 0.5 * ((HBAR * k1)**2 + (HBAR * k2)**2)
    for t in (0.0, 0.33e-14):
        assert timedep.expectation_p2(beat, t) == pytest.approx(target, rel=1e-9)


def test_expectation_p_beat_oscillation():
    """<p>(t) = (8/3a) hbar sin(dE t / hbar) for the equal-weight 1+2 beat."""
    s = _beat()
    period = _beat_period(s)
    peak = 8.0 * HBAR / (3.0 * A_BOX)
    p_quarter = timedep.expectation_p(s, 0.25 * period)
    assert p_quarter == pytest.approx(peak, rel=1e-9)
    assert timedep.expectation_p(s, 0.75 * period) == pytest.approx(
        -p_quarter, rel=1e-9)
    assert abs(timedep.expectation_p(s, 0.0)) <= 1e-12 * peak
    assert abs(timedep.expectation_p(s, 0.5 * period)) <= 1e-12 * peak


def test_tdse_residual_eigen_vs_detuned():
    s = _beat()
    x, t = 0.3 * A_BOX, 0.4e-14
    e1 = s.energies[0]
    assert abs(timedep.tdse_residual(s, x, t)) <= 1e-12 * e1 * abs(s.value(x, t))
    # an energy offset leaves a residual delta_e * |psi|
    mode = timedep.bare_eigenmode(M, A_BOX, 1)
    bad = timedep.Superposition(m=M, a=A_BOX,
                                components=((mode, 1.0 + 0j),),
                                energies=(1.01 * mode.e_n,))
    res = abs(timedep.tdse_residual(bad, x, 0.0))
    assert res == pytest.approx(0.01 * mode.e_n * abs(bad.value(x, 0.0)),
                                rel=1e-10)
