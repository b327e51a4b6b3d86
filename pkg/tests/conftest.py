import pytest

from cdispersion import from_matrix, from_points

_criteria = {}


@pytest.fixture
def line4():
    """Points at 0, 1, 3, 7 on the x axis."""
    return from_points([(0, 0), (1, 0), (3, 0), (7, 0)])


@pytest.fixture
def triangle345():
    return from_matrix([[0, 3, 4], [3, 0, 5], [4, 5, 0]])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        prev = _criteria.get(number, (title, True))
        _criteria[number] = (title, prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
