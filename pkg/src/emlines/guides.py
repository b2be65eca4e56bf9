"""Hollow and two-conductor waveguides: rectangular TE/TM modes, circular modes
from Bessel roots, parallel plates and coaxial TEM lines."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .constants import C0, EPS0, ETA0, MU0
from .errors import BelowCutoff, InvalidGeometry, InvalidMode, UnknownMode, Unsupported, ValidationError
from .planewave import VACUUM, Medium


class Family(str, Enum):
    TE = "TE"
    TM = "TM"
    TEM = "TEM"


@dataclass(frozen=True)
class ModeId:
    family: Family
    m: int = 0
    n: int = 0

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.m < 0 or self.n < 0 or int(self.m) != self.m or int(self.n) != self.n:
            raise InvalidMode("mode indices must be non-negative integers")

    def __str__(self) -> str:
        if self.family is Family.TEM:
            return "TEM"
        return f"{self.family.value}{self.m}{self.n}"

    @classmethod
    def parse(cls, text: str) -> "ModeId":
        t = text.strip().upper()
        if t == "TEM":
            return cls(Family.TEM)
        for fam in (Family.TE, Family.TM):
            if t.startswith(fam.value) and t[2:].isdigit():
                digits = t[2:]
                if len(digits) == 1:
                    return cls(fam, int(digits), 0)
                if len(digits) == 2:
                    return cls(fam, int(digits[0]), int(digits[1]))
                # multi-digit indices written as TE_m_n
        if "_" in t:
            fam, m, n = t.split("_")
            return cls(Family(fam), int(m), int(n))
        raise InvalidMode(f"cannot parse mode {text!r}")


@dataclass(frozen=True)
class ModeParams:
    f_c: float
    beta: Optional[float]  # None below cutoff
    alpha: float  # evanescent attenuation below cutoff, 0 above
    lambda_g: float  # inf at or below cutoff
    v_p: float
    v_g: float
    z_wave: complex

    @property
    def cutoff(self) -> bool:
        return self.beta is None or self.beta == 0


def _material_speed(fill: Medium) -> float:
    return C0 / math.sqrt(fill.eps_r_re * fill.mu_r_re)


def _eta(fill: Medium) -> float:
    return ETA0 * math.sqrt(fill.mu_r_re / fill.eps_r_re)


def _dispersion(f_c: float, f: float, fill: Medium, family: Family) -> ModeParams:
    """Common dispersion relations for a mode of cutoff f_c in a hollow guide."""
    if not f > 0:
        raise ValidationError("frequency must be positive")
    v = _material_speed(fill)
    eta = _eta(fill)
    k = 2 * math.pi * f / v
    if family is Family.TEM or f_c == 0:
        return ModeParams(0.0, k, 0.0, v / f, v, v, complex(eta))
    ratio = f_c / f
    if ratio >= 1:
        kc = 2 * math.pi * f_c / v
        alpha = math.sqrt(max(kc * kc - k * k, 0.0))
        z = complex(0, math.inf) if ratio == 1 else complex(0.0, 0.0)
        if family is Family.TE:
            z = complex(0, eta / math.sqrt(ratio * ratio - 1)) if ratio > 1 else complex(math.inf, 0)
        else:
            z = complex(0, -eta * math.sqrt(ratio * ratio - 1))
        return ModeParams(f_c, None if ratio > 1 else 0.0, alpha, math.inf, math.inf, 0.0, z)
    root = math.sqrt(1 - ratio * ratio)
    beta = k * root
    z = eta / root if family is Family.TE else eta * root
    return ModeParams(f_c, beta, 0.0, 2 * math.pi / beta, v / root, v * root, complex(z))


# Rectangular guide

@dataclass(frozen=True)
class RectGuide:
    a: float
    b: float
    fill: Medium = VACUUM
    wall_sigma: Optional[float] = None  # None means perfectly conducting walls

    def __post_init__(self):
        if not self.b > 0 or self.a < self.b:
            raise InvalidGeometry("need a >= b > 0")
        if self.wall_sigma is not None and not self.wall_sigma > 0:
            raise ValidationError("wall conductivity must be positive")


def _check_rect_mode(mode: ModeId) -> None:
    if mode.family is Family.TEM:
        raise InvalidMode("a hollow guide has no TEM mode")
    if mode.family is Family.TE and mode.m == 0 and mode.n == 0:
        raise InvalidMode("TE00 does not exist")
    if mode.family is Family.TM and (mode.m == 0 or mode.n == 0):
        raise InvalidMode("TM modes need m >= 1 and n >= 1")


def rect_cutoff(guide: RectGuide, mode: ModeId) -> float:
    _check_rect_mode(mode)
    v = _material_speed(guide.fill)
    return 0.5 * v * math.hypot(mode.m / guide.a, mode.n / guide.b)


def rect_mode_params(guide: RectGuide, mode: ModeId, f: float) -> ModeParams:
    return _dispersion(rect_cutoff(guide, mode), f, guide.fill, mode.family)


def mode_census(guide: RectGuide, f: float, max_index: int = 10) -> list:
    """Propagating modes (fc < f) with indices up to max_index, by ascending cutoff."""
    if max_index < 1:
        raise ValidationError("max_index must be >= 1")
    out = []
    for m in range(max_index + 1):
        for n in range(max_index + 1):
            for fam in (Family.TE, Family.TM):
                mode = ModeId(fam, m, n)
                try:
                    fc = rect_cutoff(guide, mode)
                except InvalidMode:
                    continue
                if fc < f:
                    out.append((mode, fc))
    out.sort(key=lambda e: (e[1], e[0].family.value, e[0].m, e[0].n))
    return out


def _te10_common(guide: RectGuide, f: float) -> tuple[float, float]:
    fc = rect_cutoff(guide, ModeId(Family.TE, 1, 0))
    if not f > fc:
        raise BelowCutoff(f"TE10 cutoff is {fc:.6g} Hz")
    return fc, math.sqrt(1 - (fc / f) ** 2)


def te10_power(guide: RectGuide, f: float, c_amp: float) -> float:
    """Average power carried by TE10 for H_z amplitude c_amp (A/m)."""
    fc, root = _te10_common(guide, f)
    eta = _eta(guide.fill)
    return guide.a * guide.b * c_amp**2 / 4 * eta * (f / fc) ** 2 * root


def power_to_c(guide: RectGuide, f: float, p: float) -> float:
    if p < 0:
        raise ValidationError("power must be non-negative")
    return math.sqrt(p / te10_power(guide, f, 1.0))


def peak_e_field(guide: RectGuide, f: float, c_amp: float) -> float:
    _te10_common(guide, f)
    mu = MU0 * guide.fill.mu_r_re
    return c_amp * 2 * math.pi * f * mu * guide.a / math.pi


def surface_resistance(f: float, sigma: float, mu_r: float = 1.0) -> float:
    return math.sqrt(2 * math.pi * f * MU0 * mu_r / (2 * sigma))


def rect_attenuation(guide: RectGuide, f: float, mode: ModeId = ModeId(Family.TE, 1, 0)) -> tuple[float, float]:
    """Dielectric and wall attenuation (Np/m) of the TE10 mode."""
    if mode != ModeId(Family.TE, 1, 0):
        raise Unsupported("losses are only derived for TE10")
    fc, root = _te10_common(guide, f)
    sigma_d = guide.fill.sigma + 2 * math.pi * f * EPS0 * guide.fill.eps_r_im
    alpha_d = sigma_d * ETA0 / (2 * math.sqrt(guide.fill.eps_r_re) * root)
    if guide.wall_sigma is None:
        return alpha_d, 0.0
    rs = surface_resistance(f, guide.wall_sigma)
    ratio2 = (fc / f) ** 2
    alpha_m = rs * (2 * guide.b / guide.a * ratio2 + 1) / (guide.b * _eta(guide.fill) * root)
    return alpha_d, alpha_m


# Circular guide

# (family, n, r) -> (eigenvalue, cutoff wavelength / r0), TE using roots of Jn'
BESSEL_ROOT_TABLE = {
    (Family.TM, 0, 1): (2.405, 2.61),
    (Family.TE, 0, 1): (3.832, 1.64),
    (Family.TM, 0, 2): (5.520, 1.14),
    (Family.TE, 0, 2): (7.016, 0.89),
    (Family.TE, 1, 1): (1.840, 3.41),
    (Family.TM, 1, 1): (3.832, 1.64),
    (Family.TE, 1, 2): (5.330, 1.18),
    (Family.TM, 1, 2): (7.016, 0.89),
    (Family.TE, 2, 1): (3.054, 2.06),
    (Family.TM, 2, 1): (5.135, 1.22),
    (Family.TE, 2, 2): (6.706, 0.94),
    (Family.TE, 3, 1): (4.201, 1.49),
    (Family.TM, 3, 1): (6.379, 0.98),
    (Family.TE, 4, 1): (5.318, 1.18),
    (Family.TM, 4, 1): (7.588, 0.83),
    (Family.TE, 5, 1): (6.416, 0.98),
}
BESSEL_TABLE_VERSION = "1"


def bessel_j(n: int, x: float) -> float:
    """J_n(x) from its power series; accurate for the moderate arguments used here."""
    if n < 0:
        return (-1) ** n * bessel_j(-n, x)
    half = x / 2
    term = half**n / math.factorial(n)
    total = term
    k = 0
    while True:
        k += 1
        term *= -half * half / (k * (k + n))
        total += term
        if abs(term) < 1e-17 * max(abs(total), 1e-300) and k > half:
            return total
        if k > 400:
            return total


def bessel_jp(n: int, x: float) -> float:
    """Derivative J_n'(x) via the recurrence (J_{n-1} - J_{n+1})/2."""
    if n == 0:
        return -bessel_j(1, x)
    return 0.5 * (bessel_j(n - 1, x) - bessel_j(n + 1, x))


def _bisect(fn, lo: float, hi: float) -> float:
    flo = fn(lo)
    if flo == 0:
        return lo
    if flo * fn(hi) > 0:
        raise UnknownMode("no sign change in the bracket")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = fn(mid)
        if fm == 0 or hi - lo < 1e-13:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _scan_root(fn, r: int, x_max: float = 30.0) -> float:
    """r-th positive sign change of fn, skipping the origin."""
    step = 0.05
    x, fx, found = step, fn(step), 0
    while x < x_max:
        nx = x + step
        fn_x = fn(nx)
        if fx == 0 or fx * fn_x < 0:
            found += 1
            if found == r:
                return _bisect(fn, x, nx)
        x, fx = nx, fn_x
    raise UnknownMode("root beyond the supported range")


def bessel_root(family: Family, n: int, r: int, refine: bool = False, fallback: bool = False) -> float:
    """Eigenvalue of a circular mode: r-th zero of J_n (TM) or J_n' (TE)."""
    family = Family(family)
    if family is Family.TEM or n < 0 or r < 1:
        raise UnknownMode("circular modes need TE/TM, n >= 0, r >= 1")
    fn = (lambda x: bessel_jp(n, x)) if family is Family.TE else (lambda x: bessel_j(n, x))
    entry = BESSEL_ROOT_TABLE.get((family, n, r))
    if entry is None:
        if not fallback:
            raise UnknownMode(f"{family.value}{n}{r} is not tabulated")
        return _scan_root(fn, r)
    if not refine:
        return entry[0]
    return _bisect(fn, entry[0] - 0.05, entry[0] + 0.05)


def circular_cutoff(r0: float, mode: ModeId, fill: Medium = VACUUM, fallback: bool = False) -> float:
    if not r0 > 0:
        raise InvalidGeometry("radius must be positive")
    k = bessel_root(mode.family, mode.m, mode.n, fallback=fallback)
    return _material_speed(fill) * k / (2 * math.pi * r0)


def circular_params(r0: float, mode: ModeId, f: float, fill: Medium = VACUUM, fallback: bool = False) -> ModeParams:
    """Mode parameters with mode.m the Bessel order n and mode.n the root rank r."""
    return _dispersion(circular_cutoff(r0, mode, fill, fallback), f, fill, mode.family)


def cutoff_wavelength_circular(r0: float, mode: ModeId) -> float:
    return 2 * math.pi * r0 / bessel_root(mode.family, mode.m, mode.n)


# Parallel plates and coax

def _dielectric_alpha(fill: Medium, f: float, root: float) -> float:
    w = 2 * math.pi * f
    eps_im = fill.eps_r_im + fill.sigma / (w * EPS0)
    return w * math.sqrt(fill.mu_r_re * fill.eps_r_re) / C0 * (eps_im / fill.eps_r_re) / (2 * root)


def parallel_plate(a: float, mode: ModeId, f: float, fill: Medium = VACUUM,
                   wall_sigma: Optional[float] = None) -> tuple[ModeParams, float, float]:
    """Mode parameters, conductor and dielectric attenuation (Np/m); mode.m is the plate index."""
    if not a > 0:
        raise InvalidGeometry("plate separation must be positive")
    if mode.family is not Family.TEM and mode.m < 1:
        raise InvalidMode("TE/TM plate modes need m >= 1")
    v = _material_speed(fill)
    fc = 0.0 if mode.family is Family.TEM else mode.m * v / (2 * a)
    if mode.family is not Family.TEM and not f > fc:
        raise BelowCutoff(f"cutoff is {fc:.6g} Hz")
    params = _dispersion(fc, f, fill, mode.family)
    root = math.sqrt(1 - (fc / f) ** 2)
    eta = _eta(fill)
    alpha_c = 0.0
    if wall_sigma is not None:
        rs = surface_resistance(f, wall_sigma)
        if mode.family is Family.TEM:
            alpha_c = rs / (eta * a)
        elif mode.family is Family.TE:
            alpha_c = 2 * rs * (fc / f) ** 2 / (eta * a * root)
        else:
            alpha_c = 2 * rs / (eta * a * root)
    return params, alpha_c, _dielectric_alpha(fill, f, root)


def coax_tem(a_inner: float, b_outer: float, fill: Medium = VACUUM,
             wall_sigma: Optional[float] = None, f: float = 1e9) -> tuple[float, float, float]:
    """Characteristic impedance, conductor and dielectric attenuation (Np/m)."""
    if not a_inner > 0 or not b_outer > a_inner:
        raise InvalidGeometry("coax needs b > a > 0")
    if not f > 0:
        raise ValidationError("frequency must be positive")
    eta = _eta(fill)
    ln = math.log(b_outer / a_inner)
    z0 = eta * ln / (2 * math.pi)
    alpha_c = 0.0
    if wall_sigma is not None:
        rs = surface_resistance(f, wall_sigma)
        alpha_c = rs * (1 / a_inner + 1 / b_outer) / (2 * eta * ln)
    return z0, alpha_c, _dielectric_alpha(fill, f, 1.0)
