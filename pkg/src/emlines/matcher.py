"""Single-stub matching in the four series/shunt, short/open configurations."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateStub, NoSolution, ValidationError
from .linestate import INF_Z, Load, Open, Short, input_impedance, lossless_gamma


class Topology(str, Enum):
    SERIES = "series"
    SHUNT = "shunt"


class StubEnd(str, Enum):
    SHORT = "short"
    OPEN = "open"


@dataclass(frozen=True)
class StubConfig:
    topology: Topology
    termination: StubEnd
    k: float = 1.0  # stub impedance / line impedance

    def __post_init__(self):
        object.__setattr__(self, "topology", Topology(self.topology))
        object.__setattr__(self, "termination", StubEnd(self.termination))
        if not self.k > 0:
            raise ValidationError("k must be positive")


@dataclass(frozen=True)
class StubSolution:
    d1: float  # stub position from the load, in wavelengths
    d2: float  # stub length, in wavelengths


def _fold_atan(t: float) -> float:
    """atan(t)/2pi mapped into [0, 0.5); t may be infinite."""
    d = math.atan(t) / (2 * math.pi)
    if d < 0:
        d += 0.5
    if d >= 0.5 - 1e-15:
        d = 0.0
    return d + 0.0  # no negative zero


def _position_roots(A: float, B: float, Z0: float, topology: Topology) -> tuple[float, float]:
    """The two values of tan(beta d1). Infinite means d1 = lambda/4."""
    D = A * Z0 * ((A - Z0) ** 2 + B**2)
    if D < 0:
        raise NoSolution("negative discriminant")
    root = math.sqrt(D)
    if topology is Topology.SERIES:
        q, p = B * Z0, A**2 + B**2 - A * Z0
        prod_num = Z0 * (Z0 - A)  # root1 * root2 * p
    else:
        q, p = -B * Z0, Z0**2 - A * Z0
        prod_num = A**2 + B**2 - A * Z0
    # roots (q +/- root)/p, evaluated without cancellation
    s = q + math.copysign(root, q) if q != 0 else root
    if s == 0:
        return 0.0, 0.0
    r1 = s / p if abs(p) > 1e-14 * Z0**2 else math.inf
    r2 = prod_num / s
    return r1, r2


def _transformed(zl: complex, a: float) -> complex:
    """Normalized impedance seen at tan(beta d1) = a from a normalized load."""
    if math.isinf(a):
        return 1 / zl
    return (zl + 1j * a) / (1 + 1j * zl * a)


def _stub_tan(z_junction: complex, cfg: StubConfig) -> float:
    """tan(beta d2) needed to cancel the junction reactance or susceptance."""
    if cfg.topology is Topology.SERIES:
        x = z_junction.imag
        if cfg.termination is StubEnd.SHORT:
            return -x / cfg.k  # j k tan = -j x
        return cfg.k / x if x != 0 else math.inf  # -j k / tan = -j x
    s = (1 / z_junction).imag
    if cfg.termination is StubEnd.SHORT:
        return 1 / (cfg.k * s) if s != 0 else math.inf  # -j/(k tan) = -j s
    return -cfg.k * s  # j tan / k = -j s


def solve_stub(zl: complex, z0: float, cfg: StubConfig) -> tuple[StubSolution, StubSolution]:
    """Both (position, length) pairs in wavelengths, ordered by ascending d1 then d2."""
    zl = complex(zl)
    if not zl.real > 0:
        raise ValidationError("load must have a positive real part")
    if not z0 > 0:
        raise ValidationError("z0 must be positive")
    A, B = zl.real, zl.imag
    zn = zl / z0
    sols = []
    for a in _position_roots(A, B, z0, cfg.topology):
        t = _stub_tan(_transformed(zn, a), cfg)
        if math.isnan(t):
            raise DegenerateStub("stub length undefined")
        sols.append(StubSolution(_fold_atan(a), _fold_atan(t)))
    sols.sort(key=lambda s: (s.d1, s.d2))
    return sols[0], sols[1]


def verify_match(zl: complex, z0: float, cfg: StubConfig, sol: StubSolution) -> float:
    """Relative mismatch at the junction for a proposed solution."""
    g = lossless_gamma(1.0)
    z_line = input_impedance(Load(complex(zl)), z0, g, sol.d1)
    end = Short() if cfg.termination is StubEnd.SHORT else Open()
    z_stub = input_impedance(end, cfg.k * z0, g, sol.d2)
    if cfg.topology is Topology.SERIES:
        if z_line == INF_Z or z_stub == INF_Z:
            return math.inf
        return abs(z_stub + z_line - z0) / z0
    y_line = 0j if z_line == INF_Z else (math.inf if z_line == 0 else 1 / z_line)
    y_stub = 0j if z_stub == INF_Z else (math.inf if z_stub == 0 else 1 / z_stub)
    return abs(y_stub + y_line - 1 / z0) * z0
