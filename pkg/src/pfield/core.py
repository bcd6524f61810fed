"""Shared kinematics for a particle dragging a probability field.

The model couples a point particle (momentum p_P, kinetic energy K_P) to a
real stationary field chi(x) carrying energy of its own.  The composite obeys

    E      = E_P + E_F                    (total energy splits additively)
    p^2/2m = E_F + K_P                    (matter-wave momentum p = hbar*k)

so the field energy E_F measures how far the bound level sits above the bare
particle energy.  The classical limit is E_F -> 0; regions where
E_F + K_P < 0 are forbidden to the composite.

Composite (particle-field) kinematics along the curved path q(x):

    f_F  = m v_P^2 d|chi'|/dx + f_P |chi'|
    f_PF = g [ f_P sqrt(1 + chi'^2) + m v^2 chi' chi'' / sqrt(1 + chi'^2) ]
    K_PF = g^2 K_P (1 + chi'^2)

with g a dimensionless path-normalization constant (g = 1 unless a bound
geometry fixes it otherwise).  All quantities are SI.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

PLANCK_H = 6.62607015e-34        # J s (exact)
HBAR = PLANCK_H / (2.0 * math.pi)
ELECTRON_MASS = 9.1093837015e-31  # kg
_E_CHARGE = 1.602176634e-19       # C (exact)
_EPSILON0 = 8.8541878128e-12      # F/m
GAUSSIAN_CHARGE_SQ = _E_CHARGE**2 / (4.0 * math.pi * _EPSILON0)  # e'^2, J m
BOHR_RADIUS = HBAR**2 / (ELECTRON_MASS * GAUSSIAN_CHARGE_SQ)     # m


@dataclass(frozen=True)
class PhysConstants:
    """Physical constants used across the package (SI, CODATA 2018).

    gaussian_charge_sq is the Gaussian-convention squared charge
    e'^2 = e^2/(4 pi eps0), carried as a single constant of dimension
    energy*length so hydrogen-like formulas stay free of 4*pi*eps0 factors.
    """

    hbar: float = HBAR
    planck_h: float = PLANCK_H
    electron_mass: float = ELECTRON_MASS
    gaussian_charge_sq: float = GAUSSIAN_CHARGE_SQ
    bohr_radius: float = BOHR_RADIUS


CODATA = PhysConstants()


@dataclass(frozen=True)
class DeBroglie:
    """Matter-wave triple (p, k, lambda) kept mutually consistent."""

    momentum: float
    wavenumber: float
    wavelength: float

    @classmethod
    def from_momentum(cls, p: float, hbar: float = HBAR) -> "DeBroglie":
        if p <= 0.0:
            raise ValueError("momentum must be positive")
        k = p / hbar
        return cls(momentum=p, wavenumber=k, wavelength=2.0 * math.pi / k)

    @classmethod
    def from_wavenumber(cls, k: float, hbar: float = HBAR) -> "DeBroglie":
        if k <= 0.0:
            raise ValueError("wavenumber must be positive")
        return cls(momentum=hbar * k, wavenumber=k, wavelength=2.0 * math.pi / k)

    @classmethod
    def from_wavelength(cls, lam: float, hbar: float = HBAR) -> "DeBroglie":
        if lam <= 0.0:
            raise ValueError("wavelength must be positive")
        k = 2.0 * math.pi / lam
        return cls(momentum=hbar * k, wavenumber=k, wavelength=lam)

    def kinetic_energy(self, mass: float) -> float:
        return self.momentum**2 / (2.0 * mass)


@dataclass(frozen=True)
class EnergyBudget:
    """Additive split of the total energy between particle and field."""

    e_total: float
    e_particle: float
    e_field: float
    k_particle: float
    v_particle: float
    k_field: float
    v_field: float


def energy_budget_check(b: EnergyBudget, rel_tol: float = 1e-12) -> bool:
    """True iff the three additive identities hold to rel_tol.

    e_total = e_particle + e_field, e_particle = k_particle + v_particle,
    e_field = k_field + v_field.  Kinetic terms must be non-negative.
    """
    scale = max(abs(b.e_total), abs(b.e_particle), abs(b.e_field), 1e-300)
    ok = (
        math.isclose(b.e_total, b.e_particle + b.e_field,
                     rel_tol=rel_tol, abs_tol=rel_tol * scale)
        and math.isclose(b.e_particle, b.k_particle + b.v_particle,
                         rel_tol=rel_tol, abs_tol=rel_tol * scale)
        and math.isclose(b.e_field, b.k_field + b.v_field,
                         rel_tol=rel_tol, abs_tol=rel_tol * scale)
    )
    return ok and b.k_particle >= 0.0 and b.k_field >= 0.0


class RegionClass(enum.Enum):
    ALLOWED = "allowed"
    FORBIDDEN = "forbidden"
    CLASSICAL_LIMIT = "classical_limit"


def classical_limit_epsilon(e_particle: float) -> float:
    """Default threshold below which |E_F| counts as the classical limit."""
    return 1e-6 * abs(e_particle)


def classify_region(e_field: float, k_particle: float, eps: float) -> RegionClass:
    """Classify a point of configuration space by its energy content.

    Forbidden wins over the classical-limit tag: a composite with
    E_F + K_P < 0 has imaginary matter-wave momentum there regardless of
    how small E_F itself is.
    """
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    if not (math.isfinite(e_field) and math.isfinite(k_particle)):
        raise ValueError("energies must be finite")
    if e_field + k_particle < 0.0:
        return RegionClass.FORBIDDEN
    if abs(e_field) <= eps:
        return RegionClass.CLASSICAL_LIMIT
    return RegionClass.ALLOWED


def field_force_1d(m: float, v_p: float, chi_prime: float,
                   d_abs_chi_prime_dx: float, f_p: float) -> float:
    """Force the field exerts, f_F = m v_P^2 d|chi'|/dx + f_P |chi'|.

    The caller supplies d|chi'|/dx directly; at extrema of chi' the
    derivative of the absolute value is taken one-sidedly.  For a real
    stationary mode (chi'' = -k^2 chi) this reduces, on intervals where
    chi' > 0, to -m*wbar^2*chi + f_P*chi' with wbar^2 = v_P^2 k^2.
    """
    return m * v_p**2 * d_abs_chi_prime_dx + f_p * abs(chi_prime)


def kinetic_pf(k_particle: float, chi_prime_sq: float, g: float = 1.0) -> float:
    """Composite kinetic energy K_PF = g^2 K_P (1 + chi'^2)."""
    if k_particle < 0.0:
        raise ValueError("k_particle must be non-negative")
    if chi_prime_sq < 0.0:
        raise ValueError("chi_prime_sq must be non-negative")
    return g**2 * k_particle * (1.0 + chi_prime_sq)


def pf_force_stationary(g: float, f_p: float, chi_prime: float,
                        chi_second: float, m: float, v: float) -> float:
    """Composite force along the path for a stationary real field.

    f_PF = g [ f_P sqrt(1 + chi'^2) + m v^2 chi' chi'' / sqrt(1 + chi'^2) ].
    Equals m d^2 q/dt^2 for uniform particle motion x = v t.
    """
    root = math.sqrt(1.0 + chi_prime**2)
    return g * (f_p * root + m * v**2 * chi_prime * chi_second / root)
