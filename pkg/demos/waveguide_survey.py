"""Propagating modes, dispersion and TE10 losses of a rectangular guide."""
from emlines.guides import (Family, ModeId, RectGuide, mode_census, peak_e_field, power_to_c, rect_attenuation,
                            rect_mode_params)
from emlines.planewave import Medium

guide = RectGuide(0.025, 0.01, Medium(2.11), wall_sigma=5.8e7)
f = 6e9
print(f"modes above cutoff at {f / 1e9:g} GHz:")
for mode, fc in mode_census(guide, f):
    p = rect_mode_params(guide, mode, f)
    print(f"  {mode!s:5} fc = {fc / 1e9:7.4f} GHz  lambda_g = {p.lambda_g * 100:6.3f} cm  Z = {p.z_wave.real:7.2f} ohm")
te10 = ModeId(Family.TE, 1, 0)
_, am = rect_attenuation(guide, f, te10)
print(f"TE10 wall loss {am:.4f} Np/m = {8.686 * am:.4f} dB/m")
c = power_to_c(guide, f, 1.0)
print(f"1 W carried: C = {c:.4f} A/m, peak E = {peak_e_field(guide, f, c):.1f} V/m")
