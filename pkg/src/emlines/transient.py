"""Exact bounce-diagram response of a lossless line with resistive ends."""
from __future__ import annotations

import io
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import Degenerate, NotApplicable, ValidationError
from .linestate import Open, Short


@dataclass(frozen=True)
class Step:
    pass


@dataclass(frozen=True)
class Pulse:
    width: float  # s

    def __post_init__(self):
        if not self.width > 0:
            raise ValidationError("pulse width must be positive")


@dataclass(frozen=True)
class TransientSetup:
    v0: float
    zg: float
    z0: float
    zl: Union[float, Short, Open]
    length: float
    velocity: float
    source: Union[Step, Pulse] = Step()

    def __post_init__(self):
        if not self.z0 > 0 or not self.velocity > 0 or not self.length > 0:
            raise ValidationError("need z0, velocity and length > 0")
        if self.zg < 0:
            raise ValidationError("source resistance must be non-negative")
        if not isinstance(self.zl, (Short, Open)) and self.zl < 0:
            raise ValidationError("load resistance must be non-negative")

    @property
    def tau(self) -> float:
        return self.length / self.velocity

    @property
    def rho_l(self) -> float:
        if isinstance(self.zl, Short):
            return -1.0
        if isinstance(self.zl, Open):
            return 1.0
        return (self.zl - self.z0) / (self.zl + self.z0)

    @property
    def rho_g(self) -> float:
        return (self.zg - self.z0) / (self.zg + self.z0)

    @property
    def v1(self) -> float:
        return self.v0 * self.z0 / (self.zg + self.z0)

    @property
    def i1(self) -> float:
        return self.v0 / (self.zg + self.z0)


class Arrival(NamedTuple):
    t: float
    forward: bool
    dv: float
    di: float


@dataclass(frozen=True)
class Waveform:
    """Piecewise-constant signal; each value holds from its time until the next."""
    breakpoints: tuple

    def value_at(self, t: float) -> float:
        v = 0.0
        for tb, val in self.breakpoints:
            if tb <= t:
                v = val
            else:
                break
        return v

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("t_seconds,value\r\n")
        for t, v in self.breakpoints:
            buf.write(f"{t!r},{v!r}\r\n")
        return buf.getvalue()


def _step_arrivals(setup: TransientSetup, x: float, t_end: float, delay: float, scale: float) -> list:
    """Every wavefront of a unit-step launch that reaches x before t_end."""
    l, v = setup.length, setup.velocity
    rl, rg = setup.rho_l, setup.rho_g
    z0 = setup.z0
    out = []
    amp = scale * setup.v1
    n = 0
    while True:
        t_fwd = delay + (2 * n * l + x) / v
        if t_fwd > t_end or amp == 0:
            break
        out.append(Arrival(t_fwd, True, amp, amp / z0))
        back = amp * rl
        t_back = delay + ((2 * n + 2) * l - x) / v
        if t_back <= t_end and back != 0:
            out.append(Arrival(t_back, False, back, -back / z0))
        amp = back * rg
        n += 1
    return out


def arrivals(setup: TransientSetup, observe_at: float, t_end: float) -> list:
    """Individual incident and reflected wavefronts seen at a point, in time order."""
    if not 0 <= observe_at <= setup.length:
        raise ValidationError("observation point must lie on the line")
    if not t_end > 0:
        raise ValidationError("t_end must be positive")
    out = _step_arrivals(setup, observe_at, t_end, 0.0, 1.0)
    if isinstance(setup.source, Pulse):
        out += _step_arrivals(setup, observe_at, t_end, setup.source.width, -1.0)
    out.sort(key=lambda a: (a.t, not a.forward))
    return out


def _merge(events: list, tol: float) -> tuple:
    pts = [(0.0, 0.0)]
    total = 0.0
    for t, d in events:
        total += d
        if abs(t - pts[-1][0]) <= tol:
            pts[-1] = (pts[-1][0], total)
        else:
            pts.append((t, total))
    # drop breakpoints that do not change the value
    clean = [pts[0]]
    for t, val in pts[1:]:
        if val != clean[-1][1]:
            clean.append((t, val))
    return tuple(clean)


def bounce(setup: TransientSetup, observe_at: float, t_end: float) -> tuple[Waveform, Waveform]:
    """Voltage and current at a point, exact at every wavefront arrival."""
    arr = arrivals(setup, observe_at, t_end)
    tol = 1e-12 * max(setup.tau, t_end)
    volt = _merge([(a.t, a.dv) for a in arr], tol)
    curr = _merge([(a.t, a.di) for a in arr], tol)
    return Waveform(volt), Waveform(curr)


def steady_state(setup: TransientSetup) -> tuple[float, float]:
    """Final load voltage and current for a step source."""
    if isinstance(setup.source, Pulse):
        raise NotApplicable("a pulse response decays to zero")
    if isinstance(setup.zl, Open):
        return setup.v0, 0.0
    if isinstance(setup.zl, Short):
        if setup.zg == 0:
            raise Degenerate("short-circuited ideal source")
        return 0.0, setup.v0 / setup.zg
    total = setup.zg + setup.zl
    if total == 0:
        raise Degenerate("short-circuited ideal source")
    return setup.v0 * setup.zl / total, setup.v0 / total


def reflection_series(setup: TransientSetup, count: int) -> list:
    """Amplitudes of the first count voltage wavefronts: V1, V1 rhoL, V1 rhoL rhoG, ..."""
    out, amp = [], setup.v1
    for k in range(count):
        out.append(amp)
        amp *= setup.rho_l if k % 2 == 0 else setup.rho_g
    return out
