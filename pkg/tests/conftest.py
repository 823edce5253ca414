import contextlib

import pytest

ACCEPTANCE_LINES: list[str] = []


@contextlib.contextmanager
def _record(number: int, title: str):
    try:
        yield
    except BaseException as exc:
        line = f"criterion {number}: FAIL  {title} ({type(exc).__name__})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    line = f"criterion {number}: PASS  {title}"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture
def criterion():
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
