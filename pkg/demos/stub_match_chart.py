"""Solve a shunt short-circuited stub match and draw the walk on a reflection chart."""
import sys

from emlines.matcher import StubConfig, solve_stub, verify_match
from emlines.smithchart import ChartAnnotation, GammaPoint, gamma_from_z, render_chart, rotate_toward_generator

ZL, Z0 = 40 - 40j, 100.0
cfg = StubConfig("shunt", "short")
g = gamma_from_z(ZL / Z0)
points = [(GammaPoint(g), "load")]
arcs = []
for i, sol in enumerate(solve_stub(ZL, Z0, cfg), 1):
    print(f"solution {i}: d1 = {sol.d1:.4f} lambda, stub = {sol.d2:.4f} lambda, "
          f"residual = {verify_match(ZL, Z0, cfg, sol):.1e}")
    # admittance plane: the point diametrically opposite the impedance
    points.append((GammaPoint(-rotate_toward_generator(g, sol.d1)), f"P{i}"))
    arcs.append((-g, sol.d1, f"d1 #{i}"))
points.append((GammaPoint(0), "match"))
svg = render_chart(ChartAnnotation(tuple(points), tuple(arcs), (abs(g),)))
out = sys.argv[1] if len(sys.argv) > 1 else "stub_match.svg"
with open(out, "w", encoding="utf-8") as fh:
    fh.write(svg)
print(f"chart written to {out}")
