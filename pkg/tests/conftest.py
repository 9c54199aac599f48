from contextlib import contextmanager

import pytest

_RESULTS: dict[int, tuple[str, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance criterion as PASS or FAIL and print it."""

    @contextmanager
    def record(number: int, title: str):
        try:
            yield
        except BaseException:
            _RESULTS[number] = ("FAIL", title)
            print(f"criterion {number:2d}: FAIL  {title}")
            raise
        _RESULTS[number] = ("PASS", title)
        print(f"criterion {number:2d}: PASS  {title}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, title = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
