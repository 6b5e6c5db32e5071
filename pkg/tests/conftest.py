import contextlib

import pytest

_LINES: dict[int, str] = {}


class _Record:
    def __init__(self):
        self.notes = []

    def note(self, text):
        self.notes.append(text)


@contextlib.contextmanager
def _criterion(num, title):
    rec = _Record()
    status = "FAIL"
    try:
        yield rec
        status = "PASS"
    finally:
        tail = "; ".join(rec.notes)
        line = f"criterion {num:2d}: {status}  {title}" + (f" ({tail})" if tail else "")
        _LINES[num] = line
        print(line)


@pytest.fixture
def criterion():
    return _criterion


def pytest_sessionstart(session):
    _LINES.clear()


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(_LINES):
            terminalreporter.write_line(_LINES[k])
