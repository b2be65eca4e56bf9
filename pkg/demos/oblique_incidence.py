"""Reflection coefficients versus incidence angle for both polarizations."""
import math

from emlines.boundary import Interface, brewster_angle, critical_angle, oblique
from emlines.planewave import Medium

for eps1, eps2 in ((1.0, 4.0), (4.0, 1.0)):
    iface = Interface(Medium(eps1), Medium(eps2), 1e9)
    print(f"eps_r {eps1:g} -> {eps2:g}: Brewster {math.degrees(brewster_angle(eps1, eps2)):.2f} deg", end="")
    crit = critical_angle(eps1, eps2)
    print(f", critical {math.degrees(crit):.2f} deg" if crit else "")
    for deg in range(0, 90, 10):
        r = oblique(iface, math.radians(deg))
        print(f"  {deg:2d} deg  |rho_perp| = {abs(r.rho_perp):.4f}  |rho_par| = {abs(r.rho_par):.4f}"
              + ("  (evanescent)" if r.evanescent else ""))
