import os

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from ratjones.census import census

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

CENSUS_BOUND = 900


def seqs(max_len=6, bound=5, min_len=0):
    return st.lists(st.integers(-bound, bound), min_size=min_len, max_size=max_len).map(tuple)


def even_seqs(max_len=8, bound=8):
    evens = st.integers(-bound // 2, bound // 2).map(lambda m: 2 * m)
    return st.integers(0, max_len // 2).flatmap(
        lambda h: st.lists(evens, min_size=2 * h, max_size=2 * h).map(tuple)
    )


@pytest.fixture(scope="session")
def full_census():
    """Every class with determinant below 900 (a few minutes on one core)."""
    return census(CENSUS_BOUND)


# -- acceptance criteria reporting -------------------------------------------------
# Tests marked ``criterion(number, title)`` get one PASS/FAIL line in the
# terminal summary; several tests may share a number (all must pass).

_CRITERIA: dict = {}
_TITLES: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_collection_modifyitems(config, items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            number, title = mark.args
            _TITLES[item.nodeid] = (number, title)


def pytest_runtest_logreport(report):
    if report.nodeid not in _TITLES:
        return
    if report.when == "call" or report.failed:
        number, title = _TITLES[report.nodeid]
        entry = _CRITERIA.setdefault(number, {"title": title, "ok": True, "notes": []})
        if report.failed:
            entry["ok"] = False
        for name, value in report.user_properties:
            if name == "observed" and report.when == "call":
                entry["notes"].append(str(value))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        status = "PASS" if entry["ok"] else "FAIL"
        notes = "; ".join(entry["notes"])
        line = f"criterion {number:>2}: {status}  {entry['title']}"
        terminalreporter.write_line(line + (f"  [{notes}]" if notes else ""))
