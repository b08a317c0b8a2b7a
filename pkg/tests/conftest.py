import pytest

RESULTS = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[RESULTS] = {}


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line for a numbered criterion, then assert it."""
    results = request.config.stash[RESULTS]

    def record(number, title, failures, checked):
        status = "FAIL" if failures else "PASS"
        line = f"criterion {number}: {status}  {title} [{checked} checks"
        if failures:
            line += f", {len(failures)} failed: " + "; ".join(failures[:6])
        line += "]"
        results[number] = line
        print(line)
        assert not failures, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash[RESULTS]
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
