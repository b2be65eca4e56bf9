"""Reflection and transmission of plane waves at planar interfaces and thin slabs.

Parallel-polarization signs follow the orientation in which the reflected and
incident E fields coincide at normal incidence, so rho_par(0) = rho_normal.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .errors import ValidationError
from .planewave import Medium, wave_params


@dataclass(frozen=True)
class PerfectConductor:
    pass


PEC = PerfectConductor()


@dataclass(frozen=True)
class Interface:
    medium1: Medium
    medium2: Union[Medium, PerfectConductor]
    f: float

    def __post_init__(self):
        if not self.f > 0:
            raise ValidationError("frequency must be positive")
        if isinstance(self.medium1, PerfectConductor):
            raise ValidationError("incidence side cannot be a perfect conductor")

    @property
    def z1(self) -> complex:
        return wave_params(self.medium1, self.f).eta

    @property
    def z2(self) -> complex:
        if isinstance(self.medium2, PerfectConductor):
            return 0j
        return wave_params(self.medium2, self.f).eta

    @property
    def gamma1(self) -> complex:
        return wave_params(self.medium1, self.f).gamma

    @property
    def gamma2(self) -> complex:
        if isinstance(self.medium2, PerfectConductor):
            raise ValidationError("no propagation inside a perfect conductor")
        return wave_params(self.medium2, self.f).gamma


@dataclass(frozen=True)
class ObliqueResult:
    theta_t: Optional[float]  # None when the transmitted wave is evanescent or lossy
    cos_t: complex
    evanescent: bool
    rho_perp: complex
    tau_perp: complex
    rho_par: complex
    tau_par: complex


def fresnel_normal(z1: complex, z2: complex) -> tuple[complex, complex]:
    z1, z2 = complex(z1), complex(z2)
    s = z1 + z2
    if s == 0:
        raise ValidationError("Z1 + Z2 = 0")
    return (z2 - z1) / s, 2 * z2 / s


def normal_coeffs(iface: Interface) -> tuple[complex, complex]:
    if isinstance(iface.medium2, PerfectConductor):
        return complex(-1.0), 0j
    return fresnel_normal(iface.z1, iface.z2)


def fresnel_oblique(z1: complex, z2: complex, cos_i: complex, cos_t: complex) -> tuple:
    """(rho_perp, tau_perp, rho_par, tau_par) from impedances and angle cosines."""
    d_perp = z1 * cos_t + z2 * cos_i
    d_par = z1 * cos_i + z2 * cos_t
    return ((z2 * cos_i - z1 * cos_t) / d_perp, 2 * z2 * cos_i / d_perp,
            (z2 * cos_t - z1 * cos_i) / d_par, 2 * z2 * cos_i / d_par)


def oblique(iface: Interface, theta_i: float) -> ObliqueResult:
    if not 0 <= theta_i < math.pi / 2:
        raise ValidationError("theta_i must be in [0, pi/2)")
    cos_i = math.cos(theta_i)
    if isinstance(iface.medium2, PerfectConductor):
        return ObliqueResult(None, 0j, True, complex(-1.0), 0j, complex(-1.0), 0j)
    z1, z2 = iface.z1, iface.z2
    g1, g2 = iface.gamma1, iface.gamma2
    sin_t = g1 * math.sin(theta_i) / g2  # Snell with complex propagation constants
    cos_t = cmath.sqrt(1 - sin_t * sin_t)  # principal root for lossy media
    lossless = iface.medium1.lossless and iface.medium2.lossless
    evanescent = False
    theta_t: Optional[float] = None
    if lossless:
        s = sin_t.real
        if s > 1:
            evanescent = True
            cos_t = complex(0.0, math.sqrt(s * s - 1))
        else:
            theta_t = math.asin(s)
            cos_t = complex(math.cos(theta_t))
    rp, tp, rl, tl = fresnel_oblique(z1, z2, complex(cos_i), cos_t)
    return ObliqueResult(theta_t, cos_t, evanescent, rp, tp, rl, tl)


def critical_angle(eps1: float, eps2: float) -> Optional[float]:
    if not eps1 > 0 or not eps2 > 0:
        raise ValidationError("permittivities must be positive")
    if eps2 >= eps1:
        return None
    return math.asin(math.sqrt(eps2 / eps1))


def brewster_angle(eps1: float, eps2: float) -> float:
    if not eps1 > 0 or not eps2 > 0:
        raise ValidationError("permittivities must be positive")
    return math.atan(math.sqrt(eps2 / eps1))


def slab_equivalent(z1: complex, z2: complex, z3: complex, gamma2: complex, d: float) -> tuple[complex, complex]:
    """Impedance seen at the front face of a slab backed by medium 3, and the
    resulting front-face reflection coefficient (all internal bounces included)."""
    if d < 0:
        raise ValidationError("thickness must be non-negative")
    z1, z2, z3 = complex(z1), complex(z2), complex(z3)
    t = cmath.tanh(complex(gamma2) * d)
    z_e = z2 * (z3 + z2 * t) / (z2 + z3 * t)
    return z_e, (z_e - z1) / (z_e + z1)


def slab_through(z1: complex, z2: complex, z3: complex, gamma2: complex, d: float) -> tuple[complex, float]:
    """Single-pass transmission: entry coefficient, path decay, exit coefficient."""
    if d < 0:
        raise ValidationError("thickness must be non-negative")
    _, t1 = fresnel_normal(z1, z2)
    _, t2 = fresnel_normal(z2, z3)
    ratio = t1 * t2 * cmath.exp(-complex(gamma2) * d)
    return ratio, 20 * math.log10(1 / abs(ratio))


def antireflection_layer(eps1: float, eps3: float, wavelength0: float, order: int = 0) -> tuple[float, float]:
    """Relative permittivity and thickness of a quarter-wave matching layer
    between two non-magnetic lossless media."""
    if not eps1 > 0 or not eps3 > 0 or not wavelength0 > 0 or order < 0:
        raise ValidationError("invalid antireflection inputs")
    eps2 = math.sqrt(eps1 * eps3)
    lam2 = wavelength0 / math.sqrt(eps2)
    return eps2, (2 * order + 1) * lam2 / 4


@dataclass(frozen=True)
class StandingWaveField:
    rho: complex
    envelope: Callable[[float], float]  # |E_total| at distance d in front of the interface
    e_max: float
    e_min: float
    j_s: Optional[float]  # surface current magnitude A/m on a perfect conductor


def standing_wave_surface(e_i: float, iface: Interface) -> StandingWaveField:
    rho, _ = normal_coeffs(iface)
    beta1 = iface.gamma1.imag
    ei = abs(e_i)

    def envelope(d: float) -> float:
        return ei * abs(1 + rho * cmath.exp(-2j * beta1 * d))

    j_s = 2 * ei / abs(iface.z1) if isinstance(iface.medium2, PerfectConductor) else None
    return StandingWaveField(rho, envelope, ei * (1 + abs(rho)), ei * (1 - abs(rho)), j_s)
