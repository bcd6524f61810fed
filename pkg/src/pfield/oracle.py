"""Brute-force numerical checks backing the closed-form results.

Everything here is deliberately independent of the series expansions it is
used to verify: trajectories are obtained by adaptive quadrature of the
unexpanded path integrands, derivatives by central differences, calibration
constants by bracketed root solving.  No special-function identities are
used anywhere in this module.

The quadrature is an adaptive Gauss-Kronrod (G7, K15) bisection scheme with
an embedded error estimate; identical inputs always traverse the same
interval tree, so results are bit-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, TYPE_CHECKING

if TYPE_CHECKING:
    from .boxmode import BoxMode
    from .oscillator import OscMode, OscSystem

# Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (positive half).
_XK = (
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
)
_WK = (
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
)
# Gauss-7 weights attach to the even-index Kronrod nodes.
_WG = (
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
)


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and recursion limit for the adaptive integrator."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_depth: int = 50

    def __post_init__(self) -> None:
        if self.rel_tol <= 0.0 or self.abs_tol <= 0.0:
            raise ValueError("tolerances must be positive")
        if self.max_depth < 10:
            raise ValueError("max_depth must be at least 10")


DEFAULT_QUADRATURE = QuadratureSpec()


class QuadratureError(RuntimeError):
    """Raised when the interval tree bottoms out; carries the best estimate."""

    def __init__(self, message: str, best_estimate: float, error_bound: float):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_bound = error_bound


def _gk15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    """One Gauss-Kronrod panel: returns (K15 value, |K15 - G7| estimate)."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    kron = _WK[7] * fc
    gauss = _WG[3] * fc
    for i in range(7):
        fl = f(c - h * _XK[i])
        fr = f(c + h * _XK[i])
        kron += _WK[i] * (fl + fr)
        if i % 2 == 1:
            gauss += _WG[i // 2] * (fl + fr)
    return kron * h, abs(kron - gauss) * abs(h)


def integrate(f: Callable[[float], float], a: float, b: float,
              spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Adaptive quadrature of f over [a, b].

    Panels are accepted when the embedded estimate satisfies
    err <= max(abs_tol_share, rel_tol * |panel value|), the absolute
    budget being split evenly on bisection; the scheme is therefore
    additive over subintervals of the same tree.  Raises QuadratureError
    (best estimate attached) if max_depth is reached anywhere.
    """
    if a == b:
        return 0.0
    sign = 1.0
    if a > b:
        a, b = b, a
        sign = -1.0

    def recurse(lo: float, hi: float, abs_budget: float, depth: int) -> tuple[float, float]:
        value, err = _gk15(f, lo, hi)
        if err <= max(abs_budget, spec.rel_tol * abs(value)):
            return value, err
        if depth >= spec.max_depth:
            raise QuadratureError(
                f"quadrature failed to converge on [{lo}, {hi}] "
                f"at depth {depth} (error estimate {err:.3e})",
                best_estimate=sign * value, error_bound=err)
        mid = 0.5 * (lo + hi)
        vl, el = recurse(lo, mid, 0.5 * abs_budget, depth + 1)
        vr, er = recurse(mid, hi, 0.5 * abs_budget, depth + 1)
        return vl + vr, el + er

    value, _ = recurse(a, b, spec.abs_tol, 0)
    return sign * value


def finite_diff(f: Callable[[float], float], x: float, h: float, order: int) -> float:
    """Central finite difference, O(h^2): order 1 or 2 only."""
    if h <= 0.0:
        raise ValueError("step h must be positive")
    if order == 1:
        return (f(x + h) - f(x - h)) / (2.0 * h)
    if order == 2:
        return (f(x + h) - 2.0 * f(x) + f(x - h)) / h**2
    raise ValueError("order must be 1 or 2")


def solve_root(f: Callable[[float], float], lo: float, hi: float,
               tol: float = 1e-14, max_iter: int = 200) -> float:
    """Bracketing secant/bisection hybrid root finder.

    Requires f(lo) and f(hi) of opposite sign (or zero).  The secant step
    is taken when it lands strictly inside the bracket, otherwise the
    bracket is bisected, so convergence is guaranteed and deterministic.
    """
    if not lo < hi:
        raise ValueError("need lo < hi")
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise ValueError("root not bracketed: f(lo) and f(hi) share a sign")
    for _ in range(max_iter):
        if fhi != flo:
            x = hi - fhi * (hi - lo) / (fhi - flo)
        else:
            x = 0.5 * (lo + hi)
        if not lo < x < hi:
            x = 0.5 * (lo + hi)
        fx = f(x)
        if fx == 0.0 or (hi - lo) < tol * max(1.0, abs(x)):
            return x
        if flo * fx < 0.0:
            hi, fhi = x, fx
        else:
            lo, flo = x, fx
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class ComparisonReport:
    """Record of one closed-form-vs-oracle comparison."""

    label: str
    series_value: float
    oracle_value: float
    abs_dev: float
    rel_dev: float
    passed: bool
    tolerance: float


def compare(label: str, series_value: float, oracle_value: float,
            tolerance: float, use_rel: bool = True) -> ComparisonReport:
    """Build a ComparisonReport; pass/fail judged on the chosen deviation."""
    abs_dev = abs(series_value - oracle_value)
    scale = abs(oracle_value)
    rel_dev = abs_dev / scale if scale > 0.0 else math.inf
    dev = rel_dev if use_rel else abs_dev
    return ComparisonReport(label=label, series_value=series_value,
                            oracle_value=oracle_value, abs_dev=abs_dev,
                            rel_dev=rel_dev, passed=dev <= tolerance,
                            tolerance=tolerance)


def exact_box_trajectory(mode: "BoxMode", x: float,
                         spec: QuadratureSpec = DEFAULT_QUADRATURE,
                         g: float | None = None) -> float:
    """Path length q(x) for a box mode by quadrature of the exact integrand.

    q(x) = g * integral_0^x sqrt(1 + b^2 cos^2(k_n s)) ds.  g defaults to
    the mode's own path normalization; comparisons against a differently
    normalized series may pass a matching g explicitly.
    """
    if g is None:
        g = mode.g_npf
    b_sq, k = mode.b_sq, mode.k_n

    def integrand(s: float) -> float:
        return math.sqrt(1.0 + b_sq * math.cos(k * s)**2)

    return g * integrate(integrand, 0.0, x, spec)


def exact_osc_trajectory(mode: "OscMode", sys: "OscSystem", r_bar: float,
                         spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Oscillator path by quadrature of the unexpanded radial integrand.

    q(r) = integral_0^r sqrt(1 + w(s)/(4 pi)) ds where w is the squared
    trajectory slope of the mode.  Odd in r by construction.
    """
    from .oscillator import trajectory_slope_sq

    def integrand(s: float) -> float:
        return math.sqrt(1.0 + trajectory_slope_sq(mode, sys, s) / (4.0 * math.pi))

    return integrate(integrand, 0.0, r_bar, spec)
