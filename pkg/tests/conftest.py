import collections

import pytest

CRITERIA = {
    1: "distortionless inversion",
    2: "power-flow chain",
    3: "printed stub pairs and match residuals",
    4: "slotted-line load inversion",
    5: "bounce diagram and lattice oracle",
    6: "medium propagation",
    7: "interface suite",
    8: "Fresnel property suite",
    9: "waveguide suite",
    10: "TE10 power versus quadrature",
    11: "reflection-plane math and rendering",
    12: "Bessel-root refinement",
}

_outcomes = collections.defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        if hasattr(rep, "wasxfail"):
            status = "xfail" if rep.skipped else "xpass"
        else:
            status = rep.outcome
        _outcomes[marker.args[0]].append((item.name, status))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, label in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            tr.write_line(f"criterion {n:2d} ({label}): NOT RUN")
            continue
        failed = [name for name, s in results if s in ("failed", "xpass")]
        xfailed = [name for name, s in results if s == "xfail"]
        verdict = "FAIL" if failed else "PASS"
        note = f"; {len(xfailed)} printed value(s) unreproducible, strict xfail" if xfailed else ""
        tr.write_line(f"criterion {n:2d} ({label}): {verdict}{note}")
