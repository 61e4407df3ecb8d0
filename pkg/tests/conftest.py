import pytest

from addiso.codes import GenMatrix
from addiso.gf_tower import make_field_pair
from addiso.isometry import CodeMap

OMEGA, OMEGA2 = 2, 3          # codes of w and w^2 = w + 1 in F_4 = F_2[x]/(x^2+x+1)


@pytest.fixture(scope="session")
def f4():
    return make_field_pair(2, 1, 2)


@pytest.fixture(scope="session")
def f9():
    return make_field_pair(3, 1, 2)


@pytest.fixture
def ex2(f4):
    return GenMatrix.from_rows(f4, [(1, 1, 0), (OMEGA, OMEGA, 0), (1, 0, 1)])


@pytest.fixture
def ex3(f4, ex2):
    return CodeMap.from_rows(ex2, [(1, 1, 0), (1, 0, 1), (OMEGA, OMEGA, 0)])


@pytest.fixture
def ex1(f4):
    source = GenMatrix.from_rows(f4, [(1, 1, 0), (OMEGA, 0, 1)])
    return CodeMap.from_rows(source, [(0, OMEGA2, OMEGA), (1, 0, 1)])


@pytest.fixture(scope="session")
def datadir():
    from pathlib import Path

    return Path(__file__).parent / "data"


# --- acceptance report -------------------------------------------------------------

_CRITERIA: dict[int, tuple[str, bool]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, title = marker.args
    if report.when == "setup" and report.passed:
        return
    previous = _CRITERIA.get(number, (title, True))[1]
    _CRITERIA[number] = (title, previous and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
