import pytest

from nilorder.elements import from_cycles
from nilorder.harness.catalog import build


@pytest.fixture(scope="session")
def d4():
    return build("D4")


@pytest.fixture(scope="session")
def rs():
    """Rotation r = (1 2 3 4) and reflection s = (1 3), 0-based internally."""
    return from_cycles([(0, 1, 2, 3)], 4), from_cycles([(0, 2)], 4)


# -- acceptance summary --------------------------------------------------------

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (rep.when != "call" and rep.passed):
        return
    number, title = marker.args
    _criteria[number] = (title, "PASS" if rep.passed else "SKIP" if rep.skipped else "FAIL", rep.duration, marker.kwargs.get("limit"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_criteria):
        title, status, duration, limit = _criteria[number]
        bound = f", limit {limit} s" if limit else ""
        terminalreporter.write_line(f"criterion {number}: {status} ({duration:.1f} s{bound}) {title}")
