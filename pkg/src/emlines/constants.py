"""Physical constants used throughout the package.

The engineering set below (c = 3e8 m/s, mu0 = 4*pi*1e-7 H/m) is used instead
of CODATA so that eta0 = 120*pi exactly and the 60*ln(b/a) coax rule holds.
"""
import math

C0 = 3.0e8
MU0 = 4.0e-7 * math.pi
EPS0 = 1.0 / (MU0 * C0**2)  # = 1e-9 / (36 pi)
ETA0 = MU0 * C0  # = 120 pi

NP_TO_DB = 20.0 / math.log(10.0)  # 8.686 dB per neper
