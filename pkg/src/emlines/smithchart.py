"""Exact reflection-plane arithmetic and a deterministic SVG chart renderer."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Union
from xml.sax.saxutils import escape

from .errors import Pole, ValidationError

CHART_RADIUS = 500  # SVG units for |gamma| = 1
DEFAULT_R = (0.0, 0.5, 1.0, 2.0, 5.0)
DEFAULT_X = (0.5, -0.5, 1.0, -1.0, 2.0, -2.0)


def gamma_from_z(z: complex) -> complex:
    z = complex(z)
    if z == -1:
        raise Pole("z = -1 has no reflection coefficient")
    return (z - 1) / (z + 1)


def z_from_gamma(g: complex) -> complex:
    g = complex(g)
    if g == 1:
        raise Pole("gamma = 1 is an open circuit")
    return (1 + g) / (1 - g)


def rotate_toward_generator(g: complex, delta_l_over_lambda: float) -> complex:
    """Move a reflection coefficient toward the source by a fraction of a wavelength."""
    g = complex(g)
    turns = math.fmod(2.0 * delta_l_over_lambda, 1.0)  # one full turn per half wavelength
    if turns == 0:
        return g
    return g * cmath.exp(-2j * math.pi * turns)


@dataclass(frozen=True)
class RCircle:
    r: float


@dataclass(frozen=True)
class XCircle:
    x: float


@dataclass(frozen=True)
class Circle:
    center: tuple[float, float]
    radius: float


@dataclass(frozen=True)
class RealAxis:
    """The x = 0 member of the reactance family degenerates to the real axis."""


def circle_geometry(kind: Union[RCircle, XCircle]) -> Union[Circle, RealAxis]:
    if isinstance(kind, RCircle):
        if kind.r < 0:
            raise ValidationError("r must be non-negative")
        return Circle((kind.r / (kind.r + 1), 0.0), 1 / (kind.r + 1))
    if isinstance(kind, XCircle):
        if kind.x == 0:
            return RealAxis()
        return Circle((1.0, 1 / kind.x), 1 / abs(kind.x))
    raise ValidationError(f"unknown circle family {kind!r}")


@dataclass(frozen=True)
class GammaPoint:
    gamma: complex
    position_lambda: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "gamma", complex(self.gamma))
        if abs(self.gamma) > 1 + 1e-12:
            raise ValidationError("|gamma| must not exceed 1")
        if self.position_lambda is not None and not 0 <= self.position_lambda < 0.5:
            raise ValidationError("position must be in [0, 0.5)")


@dataclass(frozen=True)
class ChartAnnotation:
    points: tuple = ()  # (GammaPoint, label)
    arcs: tuple = ()  # (start gamma, sweep in wavelengths, label)
    swr_circles: tuple = ()  # |gamma| values

    def __post_init__(self):
        for item in ("points", "arcs", "swr_circles"):
            object.__setattr__(self, item, tuple(getattr(self, item)))
        for _, sweep, _ in self.arcs:
            if not 0 <= sweep <= 0.5:
                raise ValidationError("arc sweep must be in [0, 0.5]")
        for m in self.swr_circles:
            if not 0 <= m <= 1:
                raise ValidationError("swr circle radius must be in [0, 1]")


@dataclass(frozen=True)
class Grid:
    r_values: tuple = DEFAULT_R
    x_values: tuple = DEFAULT_X


def _n(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _xy(g: complex) -> tuple[str, str]:
    return _n(CHART_RADIUS * g.real), _n(-CHART_RADIUS * g.imag)


def _circle(cx: float, cy: float, r: float, cls: str, extra: str = "") -> str:
    return (f'<circle class="{cls}" cx="{_n(CHART_RADIUS * cx)}" cy="{_n(-CHART_RADIUS * cy)}" '
            f'r="{_n(CHART_RADIUS * r)}"{extra}/>')


def _arc_path(start: complex, sweep: float) -> str:
    radius = abs(start)
    if radius == 0 or sweep == 0:
        x, y = _xy(start)
        return f"M {x} {y}"
    r = _n(CHART_RADIUS * radius)
    parts = [f"M {' '.join(_xy(start))}"]
    # split into quarter-turn pieces so every arc command is unambiguous
    steps = max(1, math.ceil(sweep / 0.125))
    for i in range(1, steps + 1):
        nxt = start * cmath.exp(-4j * math.pi * sweep * i / steps)
        # toward the generator is clockwise in the chart plane, sweep-flag 1 in SVG
        parts.append(f"A {r} {r} 0 0 1 {' '.join(_xy(nxt))}")
    return " ".join(parts)


def render_chart(ann: ChartAnnotation = ChartAnnotation(), grid: Grid = Grid()) -> str:
    """SVG 1.1 document; identical inputs give identical bytes."""
    half = CHART_RADIUS + 60
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{-half} {-half} {2 * half} {2 * half}" '
        f'width="{2 * half}" height="{2 * half}">',
        "<style>.grid{fill:none;stroke:#999;stroke-width:1}.rim{fill:none;stroke:#000;stroke-width:2}"
        ".swr{fill:none;stroke:#c00;stroke-width:1.5;stroke-dasharray:6 4}"
        ".arc{fill:none;stroke:#00c;stroke-width:2}.pt{fill:#000}text{font-size:16px;font-family:sans-serif}</style>",
        f'<defs><clipPath id="disk"><circle cx="0" cy="0" r="{CHART_RADIUS}"/></clipPath></defs>',
        '<g clip-path="url(#disk)">',
    ]
    for r in grid.r_values:
        c = circle_geometry(RCircle(r))
        out.append(_circle(c.center[0], c.center[1], c.radius, "grid"))
    for x in grid.x_values:
        c = circle_geometry(XCircle(x))
        if isinstance(c, RealAxis):
            continue
        out.append(_circle(c.center[0], c.center[1], c.radius, "grid"))
    out.append(f'<line class="grid" x1="{-CHART_RADIUS}" y1="0" x2="{CHART_RADIUS}" y2="0"/>')
    out.append("</g>")
    out.append(_circle(0.0, 0.0, 1.0, "rim"))
    for m in ann.swr_circles:
        out.append(_circle(0.0, 0.0, m, "swr"))
    for start, sweep, label in ann.arcs:
        start = complex(start)
        out.append(f'<path class="arc" d="{_arc_path(start, sweep)}"><title>{escape(str(label))}</title></path>')
    for pt, label in ann.points:
        x, y = _xy(pt.gamma)
        out.append(f'<circle class="pt" cx="{x}" cy="{y}" r="5"/>')
        tx, ty = _n(CHART_RADIUS * pt.gamma.real + 8), _n(-CHART_RADIUS * pt.gamma.imag - 8)
        out.append(f'<text x="{tx}" y="{ty}">{escape(str(label))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
