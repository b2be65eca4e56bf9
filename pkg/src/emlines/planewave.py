"""Uniform plane waves in general media: propagation, losses, polarization,
Doppler shifts, oblique-direction components and Poynting flux.

Time convention e^{+j w t}; a forward wave varies as e^{-gamma z}.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .constants import C0, EPS0, ETA0, MU0
from .errors import NotTransverse, SupersonicSource, ValidationError, ZeroField


@dataclass(frozen=True)
class Medium:
    eps_r_re: float = 1.0
    eps_r_im: float = 0.0
    mu_r_re: float = 1.0
    mu_r_im: float = 0.0
    sigma: float = 0.0
    exotic: bool = False  # allow eps_r_re < 1

    def __post_init__(self):
        if self.eps_r_im < 0 or self.mu_r_im < 0 or self.sigma < 0:
            raise ValidationError("loss terms must be non-negative")
        if not self.mu_r_re > 0:
            raise ValidationError("mu_r must be positive")
        if self.eps_r_re < 1 and not self.exotic:
            raise ValidationError("eps_r below 1 needs exotic=True")
        if not self.eps_r_re > 0 and not self.eps_r_im > 0 and not self.sigma > 0:
            raise ValidationError("medium has no permittivity")

    def eps_r_complex(self, f: float) -> complex:
        """Relative permittivity with conductivity folded into the imaginary part."""
        w = 2 * math.pi * f
        return complex(self.eps_r_re, -(self.eps_r_im + self.sigma / (w * EPS0)))

    def mu_r_complex(self) -> complex:
        return complex(self.mu_r_re, -self.mu_r_im)

    @property
    def lossless(self) -> bool:
        return self.eps_r_im == 0 and self.mu_r_im == 0 and self.sigma == 0


VACUUM = Medium()


@dataclass(frozen=True)
class WaveParams:
    alpha: float
    beta: float
    eta: complex
    delta: float
    wavelength: float
    v_p: float

    @property
    def gamma(self) -> complex:
        return complex(self.alpha, self.beta)


def wave_params(medium: Medium, f: float) -> WaveParams:
    if not f > 0:
        raise ValidationError("frequency must be positive")
    w = 2 * math.pi * f
    k0 = w / C0
    sm, se = cmath.sqrt(medium.mu_r_complex()), cmath.sqrt(medium.eps_r_complex(f))
    gamma = 1j * k0 * sm * se
    alpha, beta = max(gamma.real, 0.0), gamma.imag
    if medium.lossless:
        alpha = 0.0
    eta = ETA0 * sm / se
    if medium.lossless:
        eta = complex(eta.real, 0.0)
    delta = 1 / alpha if alpha > 0 else math.inf
    return WaveParams(alpha, beta, eta, delta, 2 * math.pi / beta, w / beta)


def loss_tangent(medium: Medium, f: float) -> float:
    e = medium.eps_r_complex(f)
    return -e.imag / e.real


def loss_metrics(medium: Medium, f: float, e0_rms: float) -> tuple[float, float]:
    """Loss tangent and time-averaged dissipated power density (W/m^3) for an RMS field."""
    if not f > 0 or e0_rms < 0:
        raise ValidationError("need f > 0 and e0_rms >= 0")
    eps_im_abs = -medium.eps_r_complex(f).imag * EPS0
    # one half w eps'' |E_peak|^2 = w eps'' E_rms^2
    p_d = 2 * math.pi * f * eps_im_abs * e0_rms**2
    return loss_tangent(medium, f), p_d


def attenuation_db(alpha: float, distance: float) -> float:
    return 20 * math.log10(math.e) * alpha * distance


# Polarization

@dataclass(frozen=True)
class PolarizationSpec:
    e1: float  # x amplitude
    e2: float  # y amplitude
    delta_phase: float  # phase of E_y relative to E_x, rad

    def __post_init__(self):
        if self.e1 < 0 or self.e2 < 0:
            raise ValidationError("amplitudes must be non-negative")


@dataclass(frozen=True)
class Polarization:
    kind: str  # linear | circular | elliptical
    handedness: Optional[str]  # left | right, for an observer watching the wave recede
    angle: float  # line angle (linear) or major-axis tilt from x, rad
    semi_major: float
    semi_minor: float
    observer: str = "receding"


def classify_polarization(spec: PolarizationSpec, tol: float = 1e-9) -> Polarization:
    e1, e2, d = spec.e1, spec.e2, spec.delta_phase
    scale = max(e1, e2)
    if scale <= 0 or scale < 1e-300:
        raise ZeroField("both field components vanish")
    s, c = math.sin(d), math.cos(d)
    if min(e1, e2) <= tol * scale or abs(s) <= tol:
        sign = 1.0 if c >= 0 else -1.0
        if e1 <= tol * scale:
            angle = math.pi / 2
        elif e2 <= tol * scale:
            angle = 0.0
        else:
            angle = math.atan2(sign * e2, e1)
        return Polarization("linear", None, angle, math.hypot(e1, e2), 0.0)
    hand = "left" if s > 0 else "right"
    if abs(c) <= tol and abs(e1 - e2) <= tol * scale:
        return Polarization("circular", hand, 0.0, scale, scale)
    tilt = 0.5 * math.atan2(2 * e1 * e2 * c, e1**2 - e2**2)
    tot = e1**2 + e2**2
    disc = math.sqrt((e1**2 - e2**2) ** 2 + 4 * e1**2 * e2**2 * c**2)
    major = math.sqrt(0.5 * (tot + disc))
    minor = math.sqrt(max(0.5 * (tot - disc), 0.0))
    return Polarization("elliptical", hand, tilt, major, minor)


# Doppler

def doppler_em(v_r: float, f0: float) -> float:
    """Radar frequency shift; v_r > 0 for a closing target."""
    return 2 * v_r * f0 / C0


def radial_velocity_from_doppler(delta_f: float, f0: float) -> float:
    return delta_f * C0 / (2 * f0)


def doppler_acoustic(f_s: float, v: float, v_source: float = 0.0, v_observer: float = 0.0,
                     source_approaching: bool = True, observer_approaching: bool = True) -> float:
    """Observed frequency for speeds given as magnitudes plus approach/recede flags."""
    if not v > 0 or v_source < 0 or v_observer < 0:
        raise ValidationError("need v > 0 and non-negative speeds")
    if v_source >= v:
        raise SupersonicSource("source speed reaches the wave speed")
    vo = v_observer if observer_approaching else -v_observer
    vs = v_source if source_approaching else -v_source
    return f_s * (v + vo) / (v - vs)


# Propagation direction

@dataclass(frozen=True)
class DirectionCosines:
    cos_a: float
    cos_b: float
    cos_c: float

    def __post_init__(self):
        n = self.cos_a**2 + self.cos_b**2 + self.cos_c**2
        if abs(n - 1) > 1e-12:
            raise ValidationError("direction cosines must satisfy sum of squares = 1")

    @classmethod
    def from_vector(cls, v: Sequence[float]) -> "DirectionCosines":
        n = math.sqrt(sum(x * x for x in v))
        if n == 0:
            raise ValidationError("zero direction")
        return cls(v[0] / n, v[1] / n, v[2] / n)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.cos_a, self.cos_b, self.cos_c)


class AxisComponent(NamedTuple):
    beta: float
    wavelength: float  # inf along an axis normal to the propagation direction
    v_p: float
    normal: bool  # True when the axis is perpendicular to the propagation


def directional_components(beta: float, direction: DirectionCosines, f: float) -> list:
    if not beta > 0:
        raise ValidationError("beta must be positive")
    w = 2 * math.pi * f
    out = []
    for c in direction.as_tuple():
        b = beta * abs(c)
        if b == 0:
            out.append(AxisComponent(0.0, math.inf, math.inf, True))
        else:
            out.append(AxisComponent(b, 2 * math.pi / b, w / b, False))
    return out


def direction_from_wavelengths(wavelength: float, lambda_x: float, lambda_y: float) -> tuple:
    """Third axial wavelength and the two candidate directions (z sign ambiguous)."""
    ca, cb = wavelength / lambda_x, wavelength / lambda_y
    rest = 1 - ca**2 - cb**2
    if rest < -1e-12:
        raise ValidationError("axial wavelengths are too short for this wavelength")
    cc = math.sqrt(max(rest, 0.0))
    lam_z = wavelength / cc if cc > 0 else math.inf
    return lam_z, (DirectionCosines(ca, cb, cc), DirectionCosines(ca, cb, -cc))


# Fields

def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def companion_field(e_field: Sequence[complex], direction: DirectionCosines, eta: complex,
                    tol: float = 1e-9) -> tuple:
    """Magnetic phasor n x E / eta of a plane wave."""
    e = tuple(complex(x) for x in e_field)
    n = direction.as_tuple()
    mag = math.sqrt(sum(abs(x) ** 2 for x in e))
    if abs(sum(ei * ni for ei, ni in zip(e, n))) > tol * max(mag, 1e-300):
        raise NotTransverse("E has a component along the propagation direction")
    eta = complex(eta)
    return tuple(x / eta for x in _cross(n, e))


def poynting_avg(e: Sequence[complex], h: Sequence[complex]) -> tuple:
    """Time-averaged Poynting vector from peak phasors."""
    hc = [complex(x).conjugate() for x in h]
    s = _cross([complex(x) for x in e], hc)
    return tuple(0.5 * x.real for x in s)


def intrinsic_impedance(medium: Medium, f: float) -> complex:
    return wave_params(medium, f).eta


def mu_abs(medium: Medium) -> complex:
    return MU0 * medium.mu_r_complex()
