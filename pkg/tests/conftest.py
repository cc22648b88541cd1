import pytest

from adventitious.search import Convention, run_search


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive searches (minutes)")


@pytest.fixture(scope="session")
def tripp_report():
    return run_search(Convention("tripp-even"), digits=100)


@pytest.fixture(scope="session")
def full_report():
    return run_search(Convention("full"), digits=100)


@pytest.fixture(scope="session")
def unit60_report():
    return run_search(Convention("unit", 60), digits=100)


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line: criterion(number, passed, detail)."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def record(number: int, passed: bool, detail: str) -> None:
        lines.append(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}")

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
