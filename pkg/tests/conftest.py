import pytest

from ybveronese import Solution, enumerate_solutions, make_permutation, make_trivial


def square_free_n3() -> Solution:
    """Order-3 square-free solution with relations x3x2=x1x3, x3x1=x2x3, x2x1=x1x2."""
    m = {(3, 1): (2, 3), (2, 3): (3, 1), (3, 2): (1, 3), (1, 3): (3, 2), (2, 1): (1, 2), (1, 2): (2, 1)}
    return Solution.from_mapping(3, m)


def permutation_n2() -> Solution:
    """Order-2 permutation solution for the transposition f = (1 2)."""
    return make_permutation(2, (2, 1))


@pytest.fixture
def sf3() -> Solution:
    return square_free_n3()


@pytest.fixture
def perm2() -> Solution:
    return permutation_n2()


@pytest.fixture
def trivial2() -> Solution:
    return make_trivial(2)


@pytest.fixture(scope="session")
def catalog() -> list[Solution]:
    return [s for n in (1, 2, 3) for s in enumerate_solutions(n)]


_acceptance: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _acceptance.append((marker.args[0], "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in _acceptance:
        terminalreporter.write_line(f"{status}  {label}")
