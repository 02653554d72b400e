import pytest

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion."""
    lines = request.config.stash[_LINES]

    def record(number: int, title: str, failures: list):
        status = "PASS" if not failures else "FAIL"
        detail = "" if not failures else f" ({len(failures)} bad, first: {failures[0]})"
        line = f"{status} criterion {number}: {title}{detail}"
        lines.append(line)
        print(line)
        assert not failures, line

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
