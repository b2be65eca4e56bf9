import cmath
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from emlines.errors import BranchAmbiguity, Degenerate, ValidationError
from emlines.lineparams import PropagationConstant
from emlines.linestate import (INF_Z, Load, Open, Short, input_impedance, line_from_oc_sc,
                               load_from_measurements, lossless_gamma, power_flow, quarter_wave_z,
                               reflection_coefficient, reflection_state, standing_wave)

G1 = lossless_gamma(1.0)
z_passive = st.builds(complex, st.floats(0.1, 500), st.floats(-500, 500))


def tan_form(zl, z0, bd):
    """Lossless transformation written with tan, as an independent evaluation."""
    t = math.tan(bd)
    return z0 * (zl + 1j * z0 * t) / (z0 + 1j * zl * t)


def test_rho_example():
    rho = reflection_coefficient(100 + 100j, 50)
    assert abs(rho) == pytest.approx(0.62, abs=0.005)
    assert math.degrees(cmath.phase(rho)) == pytest.approx(29.7, abs=0.05)


def test_rho_exact_limits():
    assert reflection_coefficient(Short(), 50) == -1
    assert reflection_coefficient(Open(), 50) == 1
    assert reflection_coefficient(50, 50) == 0


def test_rho_problem_value():
    rho = reflection_coefficient(50 + 25j, 50)
    assert abs(rho) == pytest.approx(0.2425, abs=1e-4)
    assert math.degrees(cmath.phase(rho)) == pytest.approx(75.96, abs=0.01)


def test_rho_pole():
    with pytest.raises(Degenerate):
        reflection_coefficient(50j, -50j)
    with pytest.raises(ValidationError):
        Load(-1 + 0j)


def test_zin_example():
    z = input_impedance(75, 50, G1, 0.15)
    assert z.real == pytest.approx(41.25, abs=0.005)
    assert z.imag == pytest.approx(-16.35, abs=0.005)


def test_zin_lossless_problem():
    lam = 0.6 * 3e8 / 2e6
    z = input_impedance(60 + 40j, 50, lossless_gamma(lam), 30)
    assert z.real == pytest.approx(23.97, abs=0.01)
    assert z.imag == pytest.approx(1.35, abs=0.01)


@given(zl=z_passive, d=st.floats(0, 5))
def test_zin_matches_tan_form(zl, d):
    bd = 2 * math.pi * d
    assume(abs(math.cos(bd)) > 1e-3)
    ref = tan_form(zl, 50, bd)
    assume(abs(ref) < 1e6)
    assert input_impedance(zl, 50, G1, d) == pytest.approx(ref, rel=1e-9, abs=1e-9)


@given(zl=z_passive)
def test_half_wave_identity(zl):
    assert input_impedance(zl, 50, G1, 0.5) == pytest.approx(zl, rel=1e-12, abs=1e-10)


def test_short_open_forms():
    d = 0.1
    assert input_impedance(Short(), 50, G1, d) == pytest.approx(50j * math.tan(2 * math.pi * d))
    assert input_impedance(Open(), 50, G1, d) == pytest.approx(-50j / math.tan(2 * math.pi * d))


def test_quarter_wave_short_pole():
    assert input_impedance(Short(), 50, G1, 0.25) == INF_Z


@given(d=st.floats(0.001, 2))
def test_short_open_product(d):
    bd = 2 * math.pi * d
    assume(abs(math.sin(bd)) > 1e-6 and abs(math.cos(bd)) > 1e-6)
    prod = input_impedance(Short(), 50, G1, d) * input_impedance(Open(), 50, G1, d)
    assert prod == pytest.approx(2500, rel=1e-9)


def test_lossy_uses_gamma():
    pc = PropagationConstant(0.5, 2.0)
    d, z0, zl = 0.7, 50 + 5j, 30 - 20j
    t = cmath.tanh(pc.gamma * d)
    ref = z0 * (zl + z0 * t) / (z0 + zl * t)
    assert input_impedance(zl, z0, pc, d) == pytest.approx(ref, rel=1e-12)


def test_lossy_long_line_tends_to_z0():
    pc = PropagationConstant(1.0, 3.0)
    assert input_impedance(200 + 0j, 50, pc, 30) == pytest.approx(50, rel=1e-12)


def test_standing_wave_example():
    rho = reflection_coefficient(100 + 100j, 50)
    sw = standing_wave(rho, 1.0)
    assert sw.d_max[0] == pytest.approx(0.041, abs=0.0005)
    assert sw.d_min[0] == pytest.approx(0.291, abs=0.0005)


def test_standing_wave_real_rho():
    assert standing_wave(0.3, 1.0).d_max[0] == 0


def test_standing_wave_pure_imaginary():
    sw = standing_wave(0.75j, 1.0)
    assert sw.swr == pytest.approx(7)
    assert sw.d_min[0] == pytest.approx(0.375)


def test_infinite_swr():
    assert standing_wave(-1, 1.0).swr == math.inf


@given(m=st.floats(0.01, 0.99), phi=st.floats(-math.pi, math.pi))
def test_extrema_spacing(m, phi):
    sw = standing_wave(cmath.rect(m, phi), 1.0)
    gap = (sw.d_min[0] - sw.d_max[0]) % 0.5
    assert gap == pytest.approx(0.25, abs=1e-12)
    for d in sw.d_max + sw.d_min:
        assert 0 <= d < 1


def test_load_from_measurement_problem():
    zl = load_from_measurements(3, 0.05, 0.4, 50)
    assert zl == pytest.approx(30 - 40j, abs=1e-9)
    rho = reflection_coefficient(zl, 50)
    assert abs(rho) == pytest.approx(0.5)
    assert cmath.phase(rho) == pytest.approx(-math.pi / 2)


def test_load_from_measurement_example():
    zl = load_from_measurements(7, 0.375, 1.0, 50)
    assert zl == pytest.approx(14 + 48j, abs=1e-9)


def test_load_matched():
    assert load_from_measurements(1, 0.123, 1.0, 50) == pytest.approx(50)


@given(zl=z_passive)
def test_measurement_round_trip(zl):
    rho = reflection_coefficient(zl, 50)
    assume(0.01 < abs(rho) < 0.98)
    sw = standing_wave(rho, 1.0)
    back = load_from_measurements(sw.swr, sw.d_min[0], 1.0, 50)
    assert abs(back - zl) / abs(zl) < 1e-9


def test_oc_sc_problem():
    sol = line_from_oc_sc(-54.6j, 103j, 1.5)
    assert sol.z0.real == pytest.approx(75, abs=0.05)
    assert sol.beta == pytest.approx(0.628, abs=0.001)
    assert sol.wavelength == pytest.approx(10, abs=0.02)


def test_oc_sc_needs_short_line():
    with pytest.raises(BranchAmbiguity):
        line_from_oc_sc(-54.6j, 103j, 1.5, short_line=False)


@given(z0=st.floats(10, 300), lam=st.floats(0.5, 20), frac=st.floats(0.01, 0.24))
def test_oc_sc_round_trip(z0, lam, frac):
    l = frac * lam
    g = lossless_gamma(lam)
    zoc = input_impedance(Open(), z0, g, l)
    zsc = input_impedance(Short(), z0, g, l)
    assert zoc * zsc == pytest.approx(z0 * z0, rel=1e-9)
    sol = line_from_oc_sc(zoc, zsc, l)
    assert sol.z0 == pytest.approx(z0, rel=1e-9)
    assert sol.wavelength == pytest.approx(lam, rel=1e-9)


def test_power_flow_example():
    rep = power_flow(300, 50, 50, 0.15, 75)
    assert rep.z_in == pytest.approx(41.25 - 16.35j, abs=0.005)
    assert rep.p_in == pytest.approx(216.0, abs=0.05)
    assert rep.p_l == pytest.approx(216.0, abs=0.05)
    assert rep.p_g == pytest.approx(477.81, abs=0.005)


def test_power_matched():
    rep = power_flow(10, 50, 50, 0.3, 50)
    v1 = 5.0
    assert rep.p_l == pytest.approx(v1**2 / 100)


def test_power_reactive_load():
    assert power_flow(10, 50, 50, 0.3, 30j).p_l == pytest.approx(0, abs=1e-12)


@settings(max_examples=200)
@given(vg=st.floats(1, 500), zg=z_passive, zl=z_passive, l=st.floats(0, 2))
def test_power_conservation(vg, zg, zl, l):
    rep = power_flow(vg, zg, 50, l, zl)
    assume(rep.p_g > 1e-9)
    assert rep.p_g == pytest.approx(rep.p_zg + rep.p_in, rel=1e-9)
    assert rep.p_l == pytest.approx(rep.p_in, rel=1e-9, abs=1e-12 * rep.p_g)
    rho = reflection_coefficient(zl, 50)
    v_plus = rep.v_l / (1 + rho)
    assert rep.p_l == pytest.approx(abs(v_plus) ** 2 / 100 * (1 - abs(rho) ** 2), rel=1e-9, abs=1e-12 * rep.p_g)


def test_quarter_wave_values():
    assert quarter_wave_z(50, 26) == pytest.approx(36.06, abs=0.005)
    assert quarter_wave_z(50, 50) == 50
    z02 = quarter_wave_z(50, 80)
    assert z02 == pytest.approx(math.sqrt(4000))
    assert input_impedance(80, z02, G1, 0.25) == pytest.approx(50, rel=1e-12)


def test_reflection_state_swr():
    st_ = reflection_state(100 + 100j, 50)
    m = abs(st_.rho)
    assert st_.swr == pytest.approx((1 + m) / (1 - m))
