import csv
import io
import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given
from hypothesis import strategies as st

from emlines.cli import UNIT_SCALE, parse_complex, parse_quantity, run
from emlines.errors import ValidationError


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = run(list(argv), out, err)
    return rc, out.getvalue(), err.getvalue()


def call_json(*argv):
    rc, out, err = call(*argv)
    assert rc == 0, err
    return json.loads(out)


def test_match_example():
    doc = call_json("match", "--topology", "shunt", "--stub", "short", "--zl", "60-80j", "--z0", "50")
    pairs = [(s["d1_lambda"], s["d2_lambda"]) for s in doc["results"]["solutions"]]
    assert pairs[0] == pytest.approx((0.1104, 0.0950), abs=5e-5)
    assert pairs[1] == pytest.approx((0.2594, 0.4050), abs=5e-5)
    assert all(s["residual"] < 1e-9 for s in doc["results"]["solutions"])
    assert doc["inputs_normalized"]["zl"] == {"re": 60.0, "im": -80.0}


def test_state_rho_matched():
    doc = call_json("state", "--z0", "50", "--zl", "50", "--op", "rho")
    assert doc["results"]["rho"] == {"re": 0.0, "im": 0.0}
    assert "phase_deg" in doc["results"]


def test_census_csv():
    rc, out, _ = call("guide", "rect", "--a", "2.286cm", "--b", "1.524cm", "--census", "--f", "12GHz")
    assert rc == 0
    assert out.endswith("\r\n")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["family", "m", "n", "fc_hz"]
    assert [r[0] + r[1] + r[2] for r in rows[1:]] == ["TE10", "TE01", "TE11", "TM11"]
    assert float(rows[1][3]) == pytest.approx(6.5617e9, rel=1e-4)


def test_guide_below_cutoff_is_domain_error():
    rc, out, err = call("guide", "pp", "--a", "1cm", "--mode", "TE1", "--f", "1GHz")
    assert rc == 3 and out == ""
    assert err.count("\n") == 1 and "BelowCutoff" in err


def test_validation_exit_codes():
    for argv in (["nonsense"], ["match", "--topology", "shunt"], ["guide", "rect", "--a", "2.5parsecs"],
                 ["state", "--z0", "50", "--op", "rho"], ["guide", "rect", "--a", "1cm", "--b", "2cm", "--f", "1GHz"]):
        rc, out, err = call(*argv)
        assert rc == 2, argv
        assert out == "" and err.startswith("error:") and err.count("\n") == 1


def test_line_distortionless():
    doc = call_json("line", "distortionless", "--alpha", "0.002", "--vp", "3e8", "--z0", "50")
    assert doc["results"]["r"] == pytest.approx(0.1, rel=1e-12)
    assert doc["results"]["g"] == pytest.approx(4e-5, rel=1e-12)


def test_state_power_and_measure():
    doc = call_json("state", "--op", "power", "--z0", "50", "--zl", "75", "--vg", "300", "--zg", "50",
                    "--d", "0.15")
    assert doc["results"]["p_g"] == pytest.approx(477.81, abs=0.005)
    doc = call_json("state", "--op", "measure", "--z0", "50", "--swr", "3", "--dmin", "0.05",
                    "--wavelength", "0.4")
    assert doc["results"]["zl"]["re"] == pytest.approx(30)
    assert doc["results"]["zl"]["im"] == pytest.approx(-40)


def test_state_pole_encoded():
    doc = call_json("state", "--op", "zin", "--z0", "50", "--zl", "short", "--d", "0.25")
    assert doc["results"]["z_in"]["re"] == "inf" or doc["results"]["z_in"]["im"] == "inf"


def test_smith_svg_deterministic():
    argv = ("smith", "--z", "0.4-0.4j", "--rotate", "0.1", "--format", "svg")
    rc1, a, _ = call(*argv)
    rc2, b, _ = call(*argv)
    assert rc1 == rc2 == 0 and a == b
    ET.fromstring(a)


def test_smith_json():
    doc = call_json("smith", "--z", "0.1+0.5j", "--rotate", "0.1")
    z = doc["results"]["z_rotated"]
    assert (z["re"], z["im"]) == pytest.approx((0.38, 1.88), abs=0.02)


def test_bounce_csv():
    rc, out, _ = call("bounce", "--v0", "10", "--zg", "25", "--z0", "50", "--zl", "75", "--length", "1",
                      "--velocity", "1e8", "--t-end", "6e-8")
    assert rc == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["t_seconds", "value"]
    assert float(rows[-1][1]) == pytest.approx(7.5022, abs=1e-4)


def test_wave_and_boundary():
    doc = call_json("wave", "--op", "params", "--eps-r", "50", "--eps-im", "50", "--mu-r", "15",
                    "--mu-im", "45", "--f", "200MHz")
    assert 1 / doc["results"]["alpha"] == pytest.approx(4.846e-3, rel=1e-3)
    doc = call_json("boundary", "--op", "brewster", "--eps1", "1", "--eps2", "11.7")
    assert doc["results"]["theta_deg"] == pytest.approx(73.70, abs=0.01)
    doc = call_json("boundary", "--op", "oblique", "--eps2", "3", "--theta", "60deg", "--f", "500MHz")
    assert doc["results"]["theta_t_deg"] == pytest.approx(30)
    assert doc["inputs_normalized"]["theta_i_rad"] == pytest.approx(math.pi / 3)
    doc = call_json("boundary", "--op", "critical", "--eps1", "1", "--eps2", "4")
    assert doc["results"] == {"theta_rad": None, "exists": False}


def test_circular_and_coax():
    doc = call_json("guide", "circular", "--r0", "6cm", "--mode", "TE11", "--f", "1.5GHz")
    assert doc["results"]["f_c"] == pytest.approx(1.464e9, rel=5e-4)
    doc = call_json("guide", "coax", "--a", "1mm", "--b", "2.718281828459045mm", "--f", "1GHz")
    assert doc["results"]["z0"] == pytest.approx(60, rel=1e-12)


def test_determinism_json():
    argv = ("guide", "rect", "--a", "2.5cm", "--b", "1cm", "--f", "9GHz", "--power", "0.3", "--wall-sigma", "5.8e7")
    assert call(*argv) == call(*argv)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "emlines.cli", "state", "--z0", "50", "--zl", "50", "--op", "rho"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["magnitude"] == 0


def test_parse_quantity_whitelist():
    assert parse_quantity("2.5cm") == pytest.approx(0.025)
    assert parse_quantity("6 GHz") == 6e9
    assert parse_quantity("90deg") == pytest.approx(math.pi / 2)
    for bad in ("3ns", "abc", "1.2.3cm", ""):
        with pytest.raises(ValidationError):
            parse_quantity(bad)


def test_parse_complex():
    assert parse_complex("30-40j") == 30 - 40j
    assert parse_complex("25+25j ohm") == 25 + 25j
    with pytest.raises(ValidationError):
        parse_complex("3+4i")


@given(x=st.floats(1e-12, 1e12), unit=st.sampled_from(sorted(UNIT_SCALE)))
def test_unit_round_trip(x, unit):
    text = f"{x:.12g}{unit}"
    si = parse_quantity(text)
    back = si / UNIT_SCALE[unit]
    assert f"{back:.12g}" == f"{x:.12g}"
