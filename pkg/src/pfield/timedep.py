"""Time-dependent checks on the bare box problem.

Superpositions Psi(x, t) = sum_j c_j sqrt(2/a) sin(k_j x) e^(-i E_j t/hbar)
supply the probability bookkeeping the composite picture must respect:
density rho = |Psi|^2, flux j = (hbar/m) Im(Psi* dPsi/dx), continuity
d rho/dt + dj/dx = 0, and momentum moments <p>, <p^2>.  Stationary modes
carry zero flux and zero mean momentum; beats between levels slosh
probability with <p> oscillating about zero.

Multi-level superpositions use bare eigenmodes (field amplitude zero,
p_particle saturating each level), built by bare_eigenmode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import oracle
from .boxmode import BoxMode, BoxSystem, make_mode
from .core import HBAR


def bare_eigenmode(m: float, a: float, n: int) -> BoxMode:
    """Level n with p_particle = p_n: zero field amplitude, the bare
    quantum mode of the box."""
    p_n = HBAR * (n * math.pi / a)
    return make_mode(BoxSystem(m=m, a=a, p_particle=p_n), n)


@dataclass(frozen=True)
class Superposition:
    """Linear combination of box eigenmodes with fixed coefficients."""

    m: float
    a: float
    components: tuple[tuple[BoxMode, complex], ...]
    energies: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.m <= 0.0 or self.a <= 0.0:
            raise ValueError("m and a must be positive")
        if not self.components:
            raise ValueError("need at least one component")
        if len(self.energies) != len(self.components):
            raise ValueError("one energy per component required")

    @classmethod
    def from_modes(cls, sys: BoxSystem,
                   components: Sequence[tuple[BoxMode, complex]],
                   energies: Sequence[float] | None = None,
                   normalize: bool = True) -> "Superposition":
        """Assemble a superposition over modes of one box.

        energies default to each mode's e_n; normalize rescales the
        coefficients to unit total weight.
        """
        comps = [(mode, complex(c)) for mode, c in components]
        if energies is None:
            energies = [mode.e_n for mode, _ in comps]
        if normalize:
            w = math.sqrt(sum(abs(c) ** 2 for _, c in comps))
            if w == 0.0:
                raise ValueError("coefficients must not all vanish")
            comps = [(mode, c / w) for mode, c in comps]
        return cls(m=sys.m, a=sys.a, components=tuple(comps),
                   energies=tuple(float(e) for e in energies))

    def coefficient_norm_sq(self) -> float:
        return sum(abs(c) ** 2 for _, c in self.components)

    def _check_inside(self, x: float) -> None:
        if not 0.0 <= x <= self.a:
            raise ValueError(f"x={x} outside the box [0, {self.a}]")

    def value(self, x: float, t: float) -> complex:
        self._check_inside(x)
        amp = math.sqrt(2.0 / self.a)
        psi = 0j
        for (mode, c), e in zip(self.components, self.energies):
            phase = complex(math.cos(e * t / HBAR), -math.sin(e * t / HBAR))
            psi += c * amp * math.sin(mode.k_n * x) * phase
        return psi

    def d_dx(self, x: float, t: float) -> complex:
        self._check_inside(x)
        amp = math.sqrt(2.0 / self.a)
        out = 0j
        for (mode, c), e in zip(self.components, self.energies):
            phase = complex(math.cos(e * t / HBAR), -math.sin(e * t / HBAR))
            out += c * amp * mode.k_n * math.cos(mode.k_n * x) * phase
        return out

    def d2_dx2(self, x: float, t: float) -> complex:
        self._check_inside(x)
        amp = math.sqrt(2.0 / self.a)
        out = 0j
        for (mode, c), e in zip(self.components, self.energies):
            phase = complex(math.cos(e * t / HBAR), -math.sin(e * t / HBAR))
            out -= c * amp * mode.k_n**2 * math.sin(mode.k_n * x) * phase
        return out

    def d_dt(self, x: float, t: float) -> complex:
        self._check_inside(x)
        amp = math.sqrt(2.0 / self.a)
        out = 0j
        for (mode, c), e in zip(self.components, self.energies):
            phase = complex(math.cos(e * t / HBAR), -math.sin(e * t / HBAR))
            out += c * amp * math.sin(mode.k_n * x) * phase \
                * complex(0.0, -e / HBAR)
        return out


@dataclass(frozen=True)
class PlaneWave:
    """Free-particle harness e^(i(kx - w t)), w = hbar k^2 / 2m; carries
    the textbook flux hbar k / m."""

    k: float
    m: float

    def value(self, x: float, t: float) -> complex:
        arg = self.k * x - HBAR * self.k**2 / (2.0 * self.m) * t
        return complex(math.cos(arg), math.sin(arg))

    def d_dx(self, x: float, t: float) -> complex:
        return 1j * self.k * self.value(x, t)

    def d2_dx2(self, x: float, t: float) -> complex:
        return -self.k**2 * self.value(x, t)

    def d_dt(self, x: float, t: float) -> complex:
        w = HBAR * self.k**2 / (2.0 * self.m)
        return -1j * w * self.value(x, t)


def density(field, x: float, t: float) -> float:
    """rho = |Psi|^2."""
    return abs(field.value(x, t)) ** 2


def flux(field, x: float, t: float) -> float:
    """Probability flux (hbar/m) Im(Psi* dPsi/dx)."""
    return HBAR / field.m * (field.value(x, t).conjugate()
                             * field.d_dx(x, t)).imag


def continuity_residual(field, x: float, t: float,
                        h_x: float, h_t: float) -> float:
    """Central-difference d rho/dt + d j/dx; second order in both steps.

    x must sit at least h_x inside the domain when the field has one.
    """
    if h_x <= 0.0 or h_t <= 0.0:
        raise ValueError("h_x and h_t must be positive")
    a = getattr(field, "a", None)
    if a is not None and not h_x <= x <= a - h_x:
        raise ValueError(
            f"x={x} closer than h_x={h_x} to the domain edge [0, {a}]")
    drho_dt = (density(field, x, t + h_t)
               - density(field, x, t - h_t)) / (2.0 * h_t)
    dj_dx = (flux(field, x + h_x, t) - flux(field, x - h_x, t)) / (2.0 * h_x)
    return drho_dt + dj_dx


def norm(s: Superposition, t: float) -> float:
    """Integral of the density over the box."""
    return oracle.integrate(lambda x: density(s, x, t), 0.0, s.a)


def _complex_integral(f, lo: float, hi: float,
                      spec: oracle.QuadratureSpec) -> complex:
    re = oracle.integrate(lambda x: f(x).real, lo, hi, spec)
    im = oracle.integrate(lambda x: f(x).imag, lo, hi, spec)
    return complex(re, im)


def _moment_spec(s: Superposition, k_power: int) -> oracle.QuadratureSpec:
    """Quadrature tolerances scaled to the moment integrand.

    Parts of Psi* d^j Psi/dx^j are exact zeros polluted by rounding
    noise of order eps |Psi| |d^j Psi|; the absolute floor must sit
    above that noise or the adaptive refinement chases it forever.
    """
    c_sum = sum(abs(c) for _, c in s.components)
    k_sum = sum(abs(c) * mode.k_n**k_power for mode, c in s.components)
    return oracle.QuadratureSpec(rel_tol=1e-11,
                                 abs_tol=2e-14 * c_sum * k_sum,
                                 max_depth=50)


def expectation_p(s: Superposition, t: float) -> float:
    """<p> = -i hbar integral Psi* dPsi/dx.

    The imaginary part is a boundary term that must vanish; it is
    checked against 1e-12 relative before being dropped.
    """
    val = -1j * HBAR * _complex_integral(
        lambda x: s.value(x, t).conjugate() * s.d_dx(x, t), 0.0, s.a,
        _moment_spec(s, 1))
    if abs(val.imag) > 1e-12 * abs(val.real) + 1e-20:
        raise ValueError(
            f"<p> picked up imaginary part {val.imag:.3e}; "
            "superposition is inconsistent")
    return val.real


def expectation_p2(s: Superposition, t: float) -> float:
    """<p^2> = -hbar^2 integral Psi* d2Psi/dx2; equals the coefficient-
    weighted sum of (hbar k_j)^2 at all times."""
    val = -HBAR**2 * _complex_integral(
        lambda x: s.value(x, t).conjugate() * s.d2_dx2(x, t), 0.0, s.a,
        _moment_spec(s, 2))
    if abs(val.imag) > 1e-12 * abs(val.real) + 1e-20:
        raise ValueError(
            f"<p^2> picked up imaginary part {val.imag:.3e}; "
            "superposition is inconsistent")
    return val.real


def tdse_residual(field, x: float, t: float) -> complex:
    """i hbar dPsi/dt + (hbar^2/2m) d2Psi/dx2 inside the box (V = 0).

    Identically zero when each component's energy matches hbar^2 k^2/2m;
    an energy offset delta E leaves a residual proportional to it.
    """
    return 1j * HBAR * field.d_dt(x, t) \
        + HBAR**2 / (2.0 * field.m) * field.d2_dx2(x, t)
