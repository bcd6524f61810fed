"""Quartic self-interaction of the box field (Duffing form).

A quartic term in the field energy turns the stationary field equation
into chi'' + k^2 chi = eps chi^3.  To first order in eps the bounded
solution is

    chi = A cos(w k x + B) - (eps A^3 / 32 k^2) cos(3 w k x + 3B),
    w = 1 - 3 eps A^2 / (8 k^2),

whose residual is second order in eps.  Pinning the field to both walls
shifts the box levels: w(k) k a = n pi solves exactly to

    k_n = (n pi / 2a) [1 + sqrt(1 + 3 eps A^2 a^2 / (2 n^2 pi^2))],

which collapses bitwise onto the linear levels as eps -> 0.  All first
order formulas are trusted only while |eps| A^2 / k^2 <= 0.1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .boxmode import BoxSystem
from .core import HBAR

VALIDITY_LIMIT = 0.1
_DEFAULT_PHASE = -0.5 * math.pi


@dataclass(frozen=True)
class NonlinearParams:
    """Field-equation coefficient eps, amplitude a_tilde, and the raw
    quartic energy strength eps_prime the coefficient came from (kept
    for bookkeeping; zero when eps was given directly)."""

    eps: float
    a_tilde: float
    eps_prime: float = 0.0

    def __post_init__(self) -> None:
        if self.a_tilde <= 0.0:
            raise ValueError("a_tilde must be positive")


def from_quartic_strength(eps_prime: float, m: float, v_p: float,
                          a_tilde: float) -> NonlinearParams:
    """Reduce a quartic energy density (eps_prime/4) chi^4 to the field
    equation coefficient eps = eps_prime / (m v_p^2)."""
    if m <= 0.0 or v_p <= 0.0:
        raise ValueError("m and v_p must be positive")
    return NonlinearParams(eps=eps_prime / (m * v_p * v_p),
                           a_tilde=a_tilde, eps_prime=eps_prime)


def _check_validity(params: NonlinearParams, k: float) -> None:
    if k <= 0.0:
        raise ValueError("k must be positive")
    strength = abs(params.eps) * params.a_tilde**2 / k**2
    if strength > VALIDITY_LIMIT:
        raise ValueError(
            f"perturbative regime exceeded: |eps| a_tilde^2/k^2="
            f"{strength:.4f} > {VALIDITY_LIMIT}")


def omega_ratio(params: NonlinearParams, k: float) -> float:
    """Frequency detuning w = 1 - 3 eps a_tilde^2 / (8 k^2)."""
    _check_validity(params, k)
    return 1.0 - 3.0 * params.eps * params.a_tilde**2 / (8.0 * k**2)


def duffing_solution(params: NonlinearParams, k: float, x: float,
                     phase_b: float = _DEFAULT_PHASE) -> float:
    """First-order bounded solution at position x.

    The default phase -pi/2 selects the sine form
    a sin(w k x) + (eps a^3/32 k^2) sin(3 w k x), evaluated directly so
    the eps -> 0 limit reproduces the linear mode bit for bit.
    """
    w = omega_ratio(params, k)
    a = params.a_tilde
    third = params.eps * a**3 / (32.0 * k**2)
    if phase_b == _DEFAULT_PHASE:
        return a * math.sin(w * k * x) + third * math.sin(3.0 * w * k * x)
    arg = w * k * x + phase_b
    return a * math.cos(arg) - third * math.cos(3.0 * arg)


def duffing_second_derivative(params: NonlinearParams, k: float, x: float,
                              phase_b: float = _DEFAULT_PHASE) -> float:
    """Analytic chi'' of duffing_solution."""
    w = omega_ratio(params, k)
    a = params.a_tilde
    third = params.eps * a**3 / (32.0 * k**2)
    wk = w * k
    if phase_b == _DEFAULT_PHASE:
        return -a * wk**2 * math.sin(wk * x) \
            - third * (3.0 * wk)**2 * math.sin(3.0 * wk * x)
    arg = wk * x + phase_b
    return -a * wk**2 * math.cos(arg) + third * (3.0 * wk)**2 * math.cos(3.0 * arg)


def duffing_residual(params: NonlinearParams, k: float, x: float,
                     phase_b: float = _DEFAULT_PHASE) -> float:
    """chi'' + k^2 chi - eps chi^3 for the first-order solution.

    Scales as eps^2 a^5 / k^2: quadratic in eps at fixed amplitude.
    """
    chi = duffing_solution(params, k, x, phase_b)
    d2 = duffing_second_derivative(params, k, x, phase_b)
    return d2 + k**2 * chi - params.eps * chi**3


def radial_residual(params: NonlinearParams, k: float, r: float,
                    phase_b: float = _DEFAULT_PHASE) -> float:
    """Residual of the same form applied along a radial line; the
    stationary balance is one-dimensional in the line coordinate."""
    if r < 0.0:
        raise ValueError("r must be non-negative")
    return duffing_residual(params, k, r, phase_b)


def quantized_k(params: NonlinearParams, sys: BoxSystem, n: int) -> float:
    """Wall-pinned wavenumber of level n under the quartic term.

    Solves w(k) k a = n pi exactly:
    k_n = (n pi / 2a)[1 + sqrt(1 + 3 eps a_tilde^2 a^2/(2 n^2 pi^2))].
    A negative discriminant (strong softening) has no bounded level and
    raises ValueError.
    """
    if n < 1 or int(n) != n:
        raise ValueError("n must be a positive integer")
    disc = 1.0 + 3.0 * params.eps * params.a_tilde**2 * sys.a**2 \
        / (2.0 * n**2 * math.pi**2)
    if disc < 0.0:
        raise ValueError(
            f"no bounded level: discriminant {disc:.4f} < 0 for n={n}")
    k = n * math.pi / (2.0 * sys.a) * (1.0 + math.sqrt(disc))
    _check_validity(params, k)
    return k


def energy_levels(params: NonlinearParams, sys: BoxSystem, n: int) -> float:
    """Level energy (hbar k_n)^2 / 2m at the shifted wavenumber."""
    p_n = HBAR * quantized_k(params, sys, n)
    return p_n**2 / (2.0 * sys.m)


def cubic_term_negligibility(params: NonlinearParams, k_n: float) -> float:
    """Third-harmonic fraction |eps| a_tilde^2 / (32 k_n^2).

    At the validity limit this is 0.1/32 = 3.125e-3 of the main
    amplitude.
    """
    if k_n <= 0.0:
        raise ValueError("k_n must be positive")
    return abs(params.eps) * params.a_tilde**2 / (32.0 * k_n**2)


@dataclass(frozen=True)
class NonlinearSpectrum:
    """One shifted level: wavenumber, energy, and the solution phase."""

    n: int
    k_n: float
    e_n: float
    phase_b: float


def spectrum_level(params: NonlinearParams, sys: BoxSystem, n: int,
                   phase_b: float = _DEFAULT_PHASE) -> NonlinearSpectrum:
    """Bundle quantized_k and energy_levels for level n."""
    k = quantized_k(params, sys, n)
    p = HBAR * k
    return NonlinearSpectrum(n=n, k_n=k, e_n=p**2 / (2.0 * sys.m),
                             phase_b=phase_b)
