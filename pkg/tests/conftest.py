import pytest

from nongenerators import build_poset

ACCEPTANCE_RESULTS = []


@pytest.fixture
def singleton():
    return build_poset(["1"], [])


@pytest.fixture
def chain3():
    return build_poset(["0", "m", "1"], [("0", "m"), ("m", "1")])


@pytest.fixture
def m2():
    return build_poset(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


@pytest.fixture
def pq():
    return build_poset(["1", "p", "q"], [("p", "1"), ("q", "1")])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        ACCEPTANCE_RESULTS.append((marker.args[0], marker.args[1], rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {number}. {title}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
