"""Particle-field composite for hydrogen-like atoms.

The particle moves on a classical circular orbit of radius r with
v = sqrt(Z e'^2 / (mu r)) (e'^2 is the Gaussian squared charge e^2/4
pi eps0), while the field carries the stationary-state profile

    chi_{n,l,m}(r, theta, phi) = a_ha * bare_{n,l}(r) S_{l,m}(theta) T_m(phi)

with the angular factors of the separable density |Y|^2 = S^2 |T|^2.
The orbit energy e_mu = -Z e'^2 / 2r and the level energy
e_n = -(mu/2)(Z e'^2/hbar)^2 / n^2 split the total: the field share
e_n - e_mu vanishes exactly at r = n^2 a0 / Z, and averaging e_mu over
the quantum radial density returns e_n for every tabulated state.

Orbital sweep drags the field through its angular profile, so composite
speeds pick up the slope dS/dtheta: s states (dS/dtheta = 0) move at
exactly r theta_dot, while 2p states gain the orientation-dependent
corrections served by pf_velocity and the orbit shapes of orbit_2p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _angular, oracle
from .core import GAUSSIAN_CHARGE_SQ, HBAR

theta_factor = _angular.theta_factor
theta_factor_slope = _angular.theta_factor_slope
phi_factor = _angular.phi_factor


@dataclass(frozen=True)
class HydrogenSystem:
    """Nuclear charge number and reduced mass."""

    z: float
    mu: float

    def __post_init__(self) -> None:
        if self.z < 1.0 or self.mu <= 0.0:
            raise ValueError("need z >= 1 and mu > 0")

    @property
    def a0(self) -> float:
        """Bohr radius hbar^2 / (mu e'^2) of the reduced mass."""
        return HBAR * HBAR / (self.mu * GAUSSIAN_CHARGE_SQ)


@dataclass(frozen=True)
class HydrogenOrbit:
    """Classical circular orbit: radius, sweep rate, speed, angular
    momentum and orbit energy."""

    r: float
    theta_dot: float
    v: float
    l_c: float
    e_mu: float


@dataclass(frozen=True)
class HState:
    """Stationary state labels with the field amplitude a_ha.

    a_ha carries dimension m^(1-l) so that the l = 1 profile is
    a_ha * r * exp(-Z r / 2 a0) with dimensionless slope a_ha at the
    origin.
    """

    n: int
    l: int
    m_l: int
    a_ha: float
    e_n: float


def circular_orbit(sys: HydrogenSystem, r: float) -> HydrogenOrbit:
    """Circular orbit at radius r; force balance fixes everything else."""
    if r <= 0.0:
        raise ValueError("r must be positive")
    v = math.sqrt(sys.z * GAUSSIAN_CHARGE_SQ / (sys.mu * r))
    theta_dot = v / r
    return HydrogenOrbit(r=r, theta_dot=theta_dot, v=v, l_c=sys.mu * v * r,
                         e_mu=-0.5 * sys.z * GAUSSIAN_CHARGE_SQ / r)


def orbit_from_theta_dot(sys: HydrogenSystem, theta_dot: float) -> HydrogenOrbit:
    """Circular orbit with the given sweep rate.

    Inverts theta_dot^2 = Z e'^2 / (mu r^3); theta_dot is the natural
    hidden parameter when the orbit is driven rather than placed.
    """
    if theta_dot <= 0.0:
        raise ValueError("theta_dot must be positive")
    r = (sys.z * GAUSSIAN_CHARGE_SQ / (sys.mu * theta_dot**2)) ** (1.0 / 3.0)
    return circular_orbit(sys, r)


def level_energy(sys: HydrogenSystem, n: int) -> float:
    """e_n = -(mu/2) (Z e'^2 / hbar)^2 / n^2."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return -0.5 * sys.mu * (sys.z * GAUSSIAN_CHARGE_SQ / HBAR) ** 2 / n**2


def make_state(sys: HydrogenSystem, n: int, l: int, m_l: int = 0,
               a_ha: float = 0.1) -> HState:
    """Build a stationary state; radial closed forms cover n <= 3."""
    if not 1 <= n <= 3:
        raise ValueError("radial profiles tabulated for 1 <= n <= 3")
    if not 0 <= l < n:
        raise ValueError("need 0 <= l < n")
    if abs(m_l) > l:
        raise ValueError("need |m_l| <= l")
    if a_ha <= 0.0:
        raise ValueError("a_ha must be positive")
    return HState(n=n, l=l, m_l=m_l, a_ha=a_ha, e_n=level_energy(sys, n))


def field_energy(sys: HydrogenSystem, state: HState, r: float) -> float:
    """Field share e_n - e_mu(r) = (Z e'^2 / 2)(1/r - Z/(a0 n^2)).

    Zero exactly at r = n^2 a0 / Z, positive inside, negative outside
    (orbit faster than the level supports).
    """
    if r <= 0.0:
        raise ValueError("r must be positive")
    return 0.5 * sys.z * GAUSSIAN_CHARGE_SQ \
        * (1.0 / r - sys.z / (sys.a0 * state.n**2))


def _bare_radial(sys: HydrogenSystem, n: int, l: int, r: float) -> float:
    """Unnormalized radial profile with the r^l factor kept in meters."""
    sigma = sys.z * r / sys.a0
    if (n, l) == (1, 0):
        return math.exp(-sigma)
    if (n, l) == (2, 0):
        return (2.0 - sigma) * math.exp(-0.5 * sigma)
    if (n, l) == (2, 1):
        return r * math.exp(-0.5 * sigma)
    if (n, l) == (3, 0):
        return (27.0 - 18.0 * sigma + 2.0 * sigma**2) * math.exp(-sigma / 3.0)
    if (n, l) == (3, 1):
        return (6.0 - sigma) * r * math.exp(-sigma / 3.0)
    if (n, l) == (3, 2):
        return r * r * math.exp(-sigma / 3.0)
    raise ValueError(f"radial profile not tabulated for (n, l)=({n}, {l})")


def radial_field(sys: HydrogenSystem, state: HState, r: float) -> float:
    """chi radial part a_ha * bare_{n,l}(r); the 2p case is exactly
    a_ha * r * exp(-Z r / 2 a0)."""
    if r < 0.0:
        raise ValueError("r must be non-negative")
    return state.a_ha * _bare_radial(sys, state.n, state.l, r)


def normalized_radial(sys: HydrogenSystem, n: int, l: int, r: float) -> float:
    """Unit-normalized radial function R_{n,l} (integral R^2 r^2 dr = 1)."""
    if r < 0.0:
        raise ValueError("r must be non-negative")
    za = sys.z / sys.a0
    bare = _bare_radial(sys, n, l, r)
    if (n, l) == (1, 0):
        return 2.0 * za**1.5 * bare
    if (n, l) == (2, 0):
        return za**1.5 / (2.0 * math.sqrt(2.0)) * bare
    if (n, l) == (2, 1):
        return za**2.5 / (2.0 * math.sqrt(6.0)) * bare
    if (n, l) == (3, 0):
        return 2.0 * za**1.5 / (81.0 * math.sqrt(3.0)) * bare
    if (n, l) == (3, 1):
        return 4.0 * za**2.5 / (81.0 * math.sqrt(6.0)) * bare
    return 4.0 * za**3.5 / (81.0 * math.sqrt(30.0)) * bare


def _radial_moment(sys: HydrogenSystem, n: int, l: int, power: int) -> float:
    rmax = 30.0 * n * sys.a0 / sys.z

    def f(r: float) -> float:
        rr = normalized_radial(sys, n, l, r)
        return rr * rr * r**(2 + power)

    return oracle.integrate(f, 0.0, rmax)


def mean_inv_r(sys: HydrogenSystem, n: int, l: int) -> float:
    """<1/r> over the radial density; equals Z/(a0 n^2) for every state."""
    return _radial_moment(sys, n, l, -1)


def mean_orbit_energy(sys: HydrogenSystem, n: int, l: int) -> float:
    """<e_mu> = -(Z e'^2 / 2) <1/r>, which lands on e_n."""
    return -0.5 * sys.z * GAUSSIAN_CHARGE_SQ * mean_inv_r(sys, n, l)


def mean_field_energy(sys: HydrogenSystem, n: int, l: int) -> float:
    """<e_n - e_mu>; vanishes up to quadrature error."""
    return level_energy(sys, n) - mean_orbit_energy(sys, n, l)


def _sweep_slope_sq(sys: HydrogenSystem, state: HState, r: float,
                    theta: float) -> float:
    """Squared field slope along the orbital arc, (d chi / r d theta)^2
    with |T|^2 folded: a_ha^2 bare^2 S'^2 / (2 pi r^2)."""
    bare = _bare_radial(sys, state.n, state.l, r)
    sp = theta_factor_slope(state.l, state.m_l, theta)
    return state.a_ha**2 * bare**2 * sp**2 / (2.0 * math.pi * r**2)


def pf_velocity(sys: HydrogenSystem, state: HState, r: float, theta: float,
                theta_dot: float, exact: bool = False) -> float:
    """Composite speed of the orbit dressed with the state's field.

    The sweep drags the field through dS/dtheta, so
    v = r theta_dot sqrt(1 + u) with u = a_ha^2 bare^2 S'^2 / (2 pi r^2);
    the default returns the linearized form r theta_dot (1 + u/2).  For
    s states u = 0 and the speed is exactly r theta_dot.  For 2p0 the
    linearized correction is (3/8pi) a_ha^2 e^(-Zr/a0) sin^2(theta),
    minimal on the poles; for 2p+-1 it is (3/16pi) a_ha^2 e^(-Zr/a0)
    cos^2(theta), minimal on the equator.
    """
    if r <= 0.0:
        raise ValueError("r must be positive")
    u = _sweep_slope_sq(sys, state, r, theta)
    base = r * theta_dot
    if exact:
        return base * math.sqrt(1.0 + u)
    return base * (1.0 + 0.5 * u)


def approximation_gap(a_ha: float) -> float:
    """Worst-case linearized-minus-exact speed factor for a 2p0 state.

    The sweep slope peaks at u = 3 a_ha^2 / 4 pi (equator, origin limit
    of the envelope), giving (1 + 3 a^2/8pi) - sqrt(1 + 3 a^2/4pi);
    quartic in a_ha for small amplitude.
    """
    if a_ha <= 0.0:
        raise ValueError("a_ha must be positive")
    u = 3.0 * a_ha**2 / (4.0 * math.pi)
    return (1.0 + 0.5 * u) - math.sqrt(1.0 + u)


_ORBIT_2P_WHICH = ("p0", "pPlusMinus1")


def orbit_2p(sys: HydrogenSystem, a_ha: float, r: float, theta: float,
             which: str = "p0") -> float:
    """Composite orbit radius q(theta)/1 for the 2p states, in meters.

    p0:           q = r [1 + (a^2/8pi)  e^(-Zr/a0) (1 + cos^2 theta)]
    pPlusMinus1:  q = r [1 + (a^2/16pi) e^(-Zr/a0) (1 + sin^2 theta)]

    The p0 orbit is widest through the poles, the p+-1 orbit widest in
    the equatorial plane, each settling back toward r as the envelope
    decays.
    """
    if which not in _ORBIT_2P_WHICH:
        raise ValueError(f"which must be one of {_ORBIT_2P_WHICH}")
    if r <= 0.0:
        raise ValueError("r must be positive")
    env = a_ha**2 * math.exp(-sys.z * r / sys.a0) / (8.0 * math.pi)
    c = math.cos(theta)
    if which == "p0":
        return r * (1.0 + env * (1.0 + c * c))
    s = math.sin(theta)
    return r * (1.0 + 0.5 * env * (1.0 + s * s))


def cartesian_components_2p0(sys: HydrogenSystem, a_ha: float, r: float,
                             theta: float, phi: float) -> tuple[float, float, float]:
    """Cartesian composite coordinates for the 2p0 dressing.

    With beta = (a^2/8pi) e^(-Zr/a0):
        qx = x (1 + beta sin^2 theta), qy likewise,
        qz = z (1 + beta (2 + sin^2 theta));
    their norm reproduces orbit_2p(..., "p0") to fourth order in a_ha.
    """
    if r <= 0.0:
        raise ValueError("r must be positive")
    beta = a_ha**2 * math.exp(-sys.z * r / sys.a0) / (8.0 * math.pi)
    s = math.sin(theta)
    x = r * s * math.cos(phi)
    y = r * s * math.sin(phi)
    z = r * math.cos(theta)
    fac_xy = 1.0 + beta * s * s
    return x * fac_xy, y * fac_xy, z * (1.0 + beta * (2.0 + s * s))
