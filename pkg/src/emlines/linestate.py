"""Steady-state analysis of a terminated line: reflection, impedance transformation,
standing waves, load extraction and power flow."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import BranchAmbiguity, Degenerate, ValidationError
from .lineparams import PropagationConstant

INF_Z = complex(math.inf, 0.0)


@dataclass(frozen=True)
class Short:
    pass


@dataclass(frozen=True)
class Open:
    pass


@dataclass(frozen=True)
class Load:
    z: complex

    def __post_init__(self):
        z = complex(self.z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValidationError("load impedance must be finite, use Open")
        if z.real < 0:
            raise ValidationError("load must be passive, Re(z) >= 0")
        object.__setattr__(self, "z", z)


Termination = Union[Short, Open, Load]


def as_termination(load) -> Termination:
    if isinstance(load, (Short, Open, Load)):
        return load
    return Load(complex(load))


@dataclass(frozen=True)
class ReflectionState:
    rho: complex
    swr: float
    phi_l: float


class StandingWave(NamedTuple):
    swr: float
    d_max: list
    d_min: list


class LineSolution(NamedTuple):
    z0: complex
    beta: float
    wavelength: float


@dataclass(frozen=True)
class PowerReport:
    z_in: complex
    v_i: complex
    i_i: complex
    p_in: float
    v_l: complex
    i_l: complex
    p_l: float
    p_g: float
    p_zg: float


def reflection_coefficient(load, z0: complex) -> complex:
    load = as_termination(load)
    z0 = complex(z0)
    if z0 == 0:
        raise ValidationError("z0 must be non-zero")
    if isinstance(load, Short):
        return complex(-1.0, 0.0)
    if isinstance(load, Open):
        return complex(1.0, 0.0)
    den = load.z + z0
    if den == 0:
        raise Degenerate("ZL = -Z0 makes the reflection coefficient infinite")
    return (load.z - z0) / den


def swr_from_rho(rho: complex) -> float:
    m = abs(rho)
    if m >= 1.0:
        return math.inf
    return (1 + m) / (1 - m)


def reflection_state(load, z0: complex) -> ReflectionState:
    rho = reflection_coefficient(load, z0)
    return ReflectionState(rho, swr_from_rho(rho), cmath.phase(rho))


def input_impedance(load, z0: complex, gamma: PropagationConstant, d: float) -> complex:
    """Impedance seen a distance d from the load. Returns INF_Z at an open-circuit pole."""
    if d < 0:
        raise ValidationError("distance must be non-negative")
    load = as_termination(load)
    z0 = complex(z0)
    if gamma.alpha == 0:
        # lossless: cosh(j beta d) = cos, sinh(j beta d) = j sin
        c = complex(math.cos(gamma.beta * d))
        s = 1j * math.sin(gamma.beta * d)
    else:
        g = gamma.gamma * d
        c, s = cmath.cosh(g), cmath.sinh(g)
    if isinstance(load, Short):
        num, den = z0 * s, c
    elif isinstance(load, Open):
        num, den = z0 * c, s
    else:
        num = z0 * (load.z * c + z0 * s)
        den = z0 * c + load.z * s
    if abs(den) <= 1e-12 * abs(num):
        return INF_Z
    return num / den


def lossless_gamma(wavelength: float) -> PropagationConstant:
    return PropagationConstant(0.0, 2 * math.pi / wavelength)


def _fold(x: float, period: float) -> float:
    r = math.fmod(x, period)
    if r < 0:
        r += period
    if period - r < 1e-12 * period:
        r = 0.0
    return r


def standing_wave(rho_l: complex, wavelength: float) -> StandingWave:
    """SWR and positions of voltage maxima and minima measured from the load,
    folded into [0, wavelength). The SWR is infinite when |rho_l| = 1."""
    if not wavelength > 0:
        raise ValidationError("wavelength must be positive")
    rho_l = complex(rho_l)
    m = abs(rho_l)
    if m > 1 + 1e-12:
        raise ValidationError("|rho| > 1 is not a passive load")
    swr = swr_from_rho(rho_l)
    if m == 0:
        return StandingWave(1.0, [], [])
    phi = cmath.phase(rho_l)
    half = wavelength / 2
    first_max = _fold(phi / math.pi * wavelength / 4, half)
    first_min = _fold(first_max + wavelength / 4, half)
    d_max = [first_max, first_max + half]
    d_min = [first_min, first_min + half]
    return StandingWave(swr, d_max, d_min)


def load_from_measurements(swr: float, d_min: float, wavelength: float, z0: float) -> complex:
    """Load impedance from the SWR and the distance of the first voltage minimum."""
    if swr < 1:
        raise ValidationError("swr must be >= 1")
    if not wavelength > 0 or not 0 <= d_min < wavelength / 2:
        raise ValidationError("need 0 <= d_min < wavelength/2")
    bd = 2 * math.pi * d_min / wavelength
    c, s = math.cos(bd), math.sin(bd)
    # z0 (j s tan - 1)/(j tan - s), multiplied through by cos to avoid the pole
    return z0 * complex(-c, swr * s) / complex(-swr * c, s)


def line_from_oc_sc(z_open: complex, z_short: complex, l: float, short_line: bool = True) -> LineSolution:
    """Characteristic impedance and phase constant from open and short input impedances
    of a line of length l shorter than a quarter wavelength."""
    if not l > 0:
        raise ValidationError("length must be positive")
    if not short_line:
        raise BranchAmbiguity("phase is only unique when the line is shorter than a quarter wave")
    z_open, z_short = complex(z_open), complex(z_short)
    if z_open == 0:
        raise ValidationError("open-circuit impedance cannot be zero")
    z0 = cmath.sqrt(z_open * z_short)
    if z0.real < 0:
        z0 = -z0
    gl = cmath.atanh(cmath.sqrt(z_short / z_open))
    beta = abs(gl.imag) / l
    return LineSolution(z0, beta, 2 * math.pi / beta if beta > 0 else math.inf)


def power_flow(vg: complex, zg: complex, z0: float, l_over_lambda: float, load) -> PowerReport:
    """Voltages, currents and average powers for a generator feeding a lossless line."""
    if l_over_lambda < 0 or not z0 > 0:
        raise ValidationError("need z0 > 0 and l >= 0")
    load = as_termination(load)
    vg, zg = complex(vg), complex(zg)
    bl = 2 * math.pi * l_over_lambda
    z_in = input_impedance(load, z0, lossless_gamma(1.0), l_over_lambda)
    if math.isinf(z_in.real):
        i_i = 0j
        v_i = vg
    else:
        if zg + z_in == 0:
            raise Degenerate("source and input impedances cancel")
        i_i = vg / (zg + z_in)
        v_i = i_i * z_in
    rho_l = reflection_coefficient(load, z0)
    e = cmath.exp(-2j * bl)
    fv, fi = 1 + rho_l * e, 1 - rho_l * e
    # forward amplitude at the load, from whichever input quantity is well conditioned
    if abs(fv) >= abs(fi):
        v_plus = v_i * cmath.exp(-1j * bl) / fv
    else:
        v_plus = i_i * z0 * cmath.exp(-1j * bl) / fi
    v_l = v_plus * (1 + rho_l)
    i_l = v_plus * (1 - rho_l) / z0
    p_in = 0.5 * (v_i * i_i.conjugate()).real
    p_l = 0.5 * (v_l * i_l.conjugate()).real
    p_g = 0.5 * (vg * i_i.conjugate()).real
    p_zg = 0.5 * abs(i_i) ** 2 * zg.real
    return PowerReport(z_in, v_i, i_i, p_in, v_l, i_l, p_l, p_g, p_zg)


def quarter_wave_z(z01: float, z03: float) -> float:
    if not z01 > 0 or not z03 > 0:
        raise ValidationError("impedances must be positive")
    return math.sqrt(z01 * z03)
