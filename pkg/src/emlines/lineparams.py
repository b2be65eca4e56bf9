"""Distributed-parameter line model and geometry based characteristic impedance."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import ETA0
from .errors import InvalidGeometry, ValidationError, ZeroAdmittance


@dataclass(frozen=True)
class LineModel:
    r_per_m: float = 0.0  # ohm/m
    l_per_m: float = 0.0  # H/m
    g_per_m: float = 0.0  # S/m
    c_per_m: float = 0.0  # F/m

    def __post_init__(self):
        vals = (self.r_per_m, self.l_per_m, self.g_per_m, self.c_per_m)
        if any(v < 0 or not math.isfinite(v) for v in vals):
            raise ValidationError("line parameters must be finite and non-negative")
        if all(v == 0 for v in vals):
            raise ValidationError("line parameters cannot all be zero")


@dataclass(frozen=True)
class PropagationConstant:
    alpha: float  # Np/m
    beta: float  # rad/m

    @property
    def gamma(self) -> complex:
        return complex(self.alpha, self.beta)

    def wavelength(self) -> float:
        return 2 * math.pi / self.beta if self.beta > 0 else math.inf


def series_shunt(line: LineModel, f: float) -> tuple[complex, complex]:
    """Per-metre series impedance R + jwL and shunt admittance G + jwC."""
    w = 2 * math.pi * f
    return complex(line.r_per_m, w * line.l_per_m), complex(line.g_per_m, w * line.c_per_m)


def secondary_constants(line: LineModel, f: float) -> tuple[PropagationConstant, complex]:
    """Propagation constant and characteristic impedance at frequency f."""
    if not f > 0:
        raise ValidationError("frequency must be positive")
    z, y = series_shunt(line, f)
    if y == 0:
        raise ZeroAdmittance("G and C are both zero, Z0 is undefined")
    # z and y lie in the closed first quadrant, so the product of principal
    # roots is itself the principal root with alpha, beta >= 0
    sz, sy = complex(z) ** 0.5, complex(y) ** 0.5
    gamma = sz * sy
    z0 = sz / sy
    beta = max(gamma.imag, 0.0)
    w = 2 * math.pi * f
    # 2 alpha beta = w (RC + GL) has no cancellation, unlike Re(gamma) when alpha << beta
    cross = w * (line.r_per_m * line.c_per_m + line.g_per_m * line.l_per_m)
    alpha = cross / (2 * beta) if beta > 0 and cross < beta * beta else max(gamma.real, 0.0)
    return PropagationConstant(alpha, beta), z0


def phase_velocity(line: LineModel, f: float) -> float:
    pc, _ = secondary_constants(line, f)
    return 2 * math.pi * f / pc.beta


def solve_distortionless(alpha: float, v_p: float, z0: float) -> LineModel:
    """Line with R/G = L/C that has the requested attenuation, velocity and Z0."""
    if alpha < 0 or not v_p > 0 or not z0 > 0:
        raise ValidationError("need alpha >= 0, v_p > 0, z0 > 0")
    l = z0 / v_p
    c = 1.0 / (z0 * v_p)
    r = alpha * z0
    g = alpha / z0
    return LineModel(r, l, g, c)


# Geometries. Lengths in metres; eps_r and mu_r relative.

@dataclass(frozen=True)
class Coaxial:
    a: float  # inner conductor radius
    b: float  # outer conductor inner radius
    eps_r: float = 1.0
    mu_r: float = 1.0


@dataclass(frozen=True)
class Bifilar:
    D: float  # centre spacing
    a: float  # wire radius
    eps_r: float = 1.0
    mu_r: float = 1.0


@dataclass(frozen=True)
class EllipticFocal:
    a: float  # inner ellipse semi-major axis
    b: float  # outer ellipse semi-major axis
    c: float  # common focal half-distance
    eps_r: float = 1.0
    mu_r: float = 1.0


@dataclass(frozen=True)
class ParallelPlates:
    b: float  # plate separation
    w: float  # plate width, w >> b
    eps_r: float = 1.0
    mu_r: float = 1.0


@dataclass(frozen=True)
class CollinearPlates:
    D: float  # centre spacing, D >> w
    w: float  # strip width
    eps_r: float = 1.0
    mu_r: float = 1.0


@dataclass(frozen=True)
class WireOverPlane:
    h: float  # wire centre height above the plane
    d: float  # wire diameter
    eps_r: float = 1.0
    mu_r: float = 1.0


@dataclass(frozen=True)
class ShieldedPair:
    S: float  # wire centre spacing
    d: float  # wire diameter
    D: float  # shield inner diameter
    eps_r: float = 1.0
    mu_r: float = 1.0


@dataclass(frozen=True)
class WireInTrough:
    W: float  # trough width
    h: float  # wire centre height above the trough floor
    d: float  # wire diameter
    eps_r: float = 1.0
    mu_r: float = 1.0


@dataclass(frozen=True)
class Microstrip:
    w: float  # strip width
    h: float  # substrate height
    thickness: float = 0.0  # strip thickness
    eps_r: float = 1.0


def _eta(eps_r: float, mu_r: float) -> float:
    if not eps_r > 0 or not mu_r > 0:
        raise InvalidGeometry("eps_r and mu_r must be positive")
    return ETA0 * math.sqrt(mu_r / eps_r)


def _positive(*lengths: float) -> None:
    if any(not (x > 0 and math.isfinite(x)) for x in lengths):
        raise InvalidGeometry("all lengths must be positive")


def microstrip_effective_width(w: float, h: float, thickness: float) -> float:
    """Equivalent zero-thickness width of a strip of finite thickness."""
    if thickness == 0:
        return w
    _positive(w, h, thickness)
    if w > h / (2 * math.pi):
        x = h
    elif 2 * thickness < w < h / (2 * math.pi):
        x = 2 * math.pi * w
    else:
        raise InvalidGeometry("strip width outside the thickness-correction branches")
    return w + thickness / math.pi * (1 + math.log(2 * x / thickness))


def microstrip_effective_permittivity(w: float, h: float, eps_r: float) -> float:
    u = w / h
    base = (1 + 12 / u) ** -0.5
    if u < 1:
        base += 0.04 * (1 - u) ** 2
    return 0.5 * (eps_r + 1) + 0.5 * (eps_r - 1) * base


def geometric_z0(geom) -> float:
    """Lossless TEM characteristic impedance of a line from its cross-section."""
    if isinstance(geom, Coaxial):
        _positive(geom.a, geom.b)
        if geom.b <= geom.a:
            raise InvalidGeometry("coax needs b > a")
        return _eta(geom.eps_r, geom.mu_r) / (2 * math.pi) * math.log(geom.b / geom.a)
    if isinstance(geom, Bifilar):
        _positive(geom.D, geom.a)
        if geom.D <= geom.a:
            raise InvalidGeometry("bifilar needs D > a")
        return _eta(geom.eps_r, geom.mu_r) / math.pi * math.log(geom.D / geom.a)
    if isinstance(geom, EllipticFocal):
        _positive(geom.a, geom.b, geom.c)
        if not geom.c <= geom.a < geom.b:
            raise InvalidGeometry("elliptic line needs c <= a < b")
        num = geom.b + math.sqrt(geom.b**2 - geom.c**2)
        den = geom.a + math.sqrt(geom.a**2 - geom.c**2)
        return _eta(geom.eps_r, geom.mu_r) / (2 * math.pi) * math.log(num / den)
    if isinstance(geom, ParallelPlates):
        _positive(geom.b, geom.w)
        return _eta(geom.eps_r, geom.mu_r) * geom.b / geom.w
    if isinstance(geom, CollinearPlates):
        _positive(geom.D, geom.w)
        if 4 * geom.D <= geom.w:
            raise InvalidGeometry("collinear plates need D >> w")
        return _eta(geom.eps_r, geom.mu_r) / math.pi * math.log(4 * geom.D / geom.w)
    if isinstance(geom, WireOverPlane):
        _positive(geom.h, geom.d)
        if 4 * geom.h <= geom.d:
            raise InvalidGeometry("wire over plane needs h >> d")
        return _eta(geom.eps_r, geom.mu_r) / (2 * math.pi) * math.log(4 * geom.h / geom.d)
    if isinstance(geom, ShieldedPair):
        _positive(geom.S, geom.d, geom.D)
        if geom.S >= geom.D:
            raise InvalidGeometry("shielded pair needs S < D")
        arg = 2 * geom.S / geom.d * (geom.D**2 - geom.S**2) / (geom.D**2 + geom.S**2)
        if arg <= 1:
            raise InvalidGeometry("shielded pair dimensions give a non-positive Z0")
        return _eta(geom.eps_r, geom.mu_r) / (2 * math.pi) * math.log(arg)
    if isinstance(geom, WireInTrough):
        _positive(geom.W, geom.h, geom.d)
        arg = 4 * geom.W / (math.pi * geom.d) * math.tanh(math.pi * geom.h / geom.W)
        if arg <= 1:
            raise InvalidGeometry("wire in trough dimensions give a non-positive Z0")
        return _eta(geom.eps_r, geom.mu_r) / (2 * math.pi) * math.log(arg)
    if isinstance(geom, Microstrip):
        _positive(geom.w, geom.h)
        if geom.thickness < 0:
            raise InvalidGeometry("strip thickness must be non-negative")
        if not geom.eps_r >= 1:
            raise InvalidGeometry("substrate eps_r must be >= 1")
        we = microstrip_effective_width(geom.w, geom.h, geom.thickness)
        u = we / geom.h
        ee = microstrip_effective_permittivity(we, geom.h, geom.eps_r)
        if u >= 1:
            return ETA0 / math.sqrt(ee) / (u + 1.393 + 0.667 * math.log(u + 1.444))
        return ETA0 / (2 * math.pi) / math.sqrt(ee) * math.log(8 / u + u / 4)
    raise InvalidGeometry(f"unknown geometry {type(geom).__name__}")
