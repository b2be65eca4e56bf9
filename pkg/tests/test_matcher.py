import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emlines.errors import ValidationError
from emlines.matcher import StubConfig, StubSolution, solve_stub, verify_match

PRINTED = {
    "I.10": (90 + 60j, 75, "series", "short", 1.0, [(0.1741, 0.1027), (0.4814, 0.3973)]),
    "I.11": (50 + 40j, 50, "series", "short", 1.0, [(0.0, 0.3926), (0.1894, 0.1074)]),
    "I.12": (50 - 50j, 50, "series", "short", 1.0, [(0.0, 0.125), (0.3238, 0.375)]),
    "I.13": (90 + 60j, 75, "series", "open", 1.0, [(0.1741, 0.3527), (0.4814, 0.1473)]),
    "I.14": (50 + 40j, 50, "series", "open", 1.0, [(0.0, 0.1426), (0.1894, 0.3574)]),
    "I.16": (60 - 80j, 50, "shunt", "short", 1.0, [(0.1104, 0.0950), (0.2594, 0.4050)]),
    "I.17": (50 + 50j, 50, "shunt", "short", 1.0, [(0.25, 0.125), (0.4262, 0.375)]),
    "I.18a": (25 + 25j, 50, "shunt", "short", 1.0, [(0.0, 0.375), (0.3238, 0.125)]),
    "I.18b": (25 + 25j, 50, "shunt", "short", 1.5, [(0.0, 0.4064), (0.3238, 0.0936)]),
    "I.20": (50 + 50j, 50, "shunt", "open", 1.0, [(0.25, 0.375), (0.4262, 0.125)]),
    "Problem 5 short": (30 - 40j, 50, "shunt", "short", 1.0, [(0.0417, 0.1136), (0.2083, 0.3864)]),
    # stub lengths of the two printed pairs are exchanged, see test_swapped_printed_pairing
    "Problem 5 open": (30 - 40j, 50, "shunt", "open", 1.0, [(0.0417, 0.3636), (0.2083, 0.1364)]),
}

loads = st.builds(complex, st.floats(1, 400), st.floats(-400, 400))
configs = st.builds(StubConfig, st.sampled_from(["series", "shunt"]), st.sampled_from(["short", "open"]),
                    st.floats(0.2, 5))


@pytest.mark.parametrize("name", sorted(PRINTED))
def test_printed_pairs(name):
    zl, z0, topo, end, k, expected = PRINTED[name]
    cfg = StubConfig(topo, end, k)
    sols = solve_stub(zl, z0, cfg)
    for sol, (d1, d2) in zip(sols, expected):
        assert sol.d1 == pytest.approx(d1, abs=5e-5)
        assert sol.d2 == pytest.approx(d2, abs=5e-5)
        assert verify_match(zl, z0, cfg, sol) < 1e-9


def test_three_decimal_printing():
    sols = solve_stub(15 + 10j, 50, StubConfig("shunt", "open"))
    assert sols[0].d1 == pytest.approx(0.044, abs=5e-4)
    assert (sols[0].d2, sols[1].d1, sols[1].d2) == pytest.approx((0.1473, 0.3874, 0.3527), abs=5e-5)


def test_printed_rounded_pair_residual():
    cfg = StubConfig("series", "short")
    assert verify_match(90 + 60j, 75, cfg, StubSolution(0.1741, 0.1027)) < 1e-3


def test_swapped_printed_pairing():
    cfg = StubConfig("shunt", "open")
    assert verify_match(30 - 40j, 50, cfg, StubSolution(0.0417, 0.1364)) > 0.5
    assert verify_match(30 - 40j, 50, cfg, StubSolution(0.0417, 0.3636)) < 1e-3


def test_matched_load_zero_stub():
    assert verify_match(50, 50, StubConfig("series", "short"), StubSolution(0.0, 0.0)) == 0


def test_requires_resistive_part():
    with pytest.raises(ValidationError):
        solve_stub(30j, 50, StubConfig("shunt", "short"))
    with pytest.raises(ValidationError):
        StubConfig("shunt", "short", 0)


@settings(max_examples=300)
@given(zl=loads, cfg=configs)
def test_random_residuals(zl, cfg):
    for sol in solve_stub(zl, 50, cfg):
        assert 0 <= sol.d1 < 0.5 and 0 <= sol.d2 < 0.5
        assert verify_match(zl, 50, cfg, sol) < 1e-9


@given(zl=loads, topo=st.sampled_from(["series", "shunt"]))
def test_short_and_open_share_positions(zl, topo):
    short = solve_stub(zl, 50, StubConfig(topo, "short"))
    opened = solve_stub(zl, 50, StubConfig(topo, "open"))
    pos_s = sorted(s.d1 for s in short)
    pos_o = sorted(s.d1 for s in opened)
    assert pos_s == pytest.approx(pos_o, abs=1e-12)
    for s in short:
        o = next(x for x in opened if abs(x.d1 - s.d1) < 1e-12)
        diff = math.fmod(s.d2 - o.d2 + 1.0, 0.5)
        assert abs(diff - 0.25) < 1e-9


def test_ordering():
    sols = solve_stub(60 - 80j, 50, StubConfig("shunt", "short"))
    assert (sols[0].d1, sols[0].d2) <= (sols[1].d1, sols[1].d2)
