import pytest

_LINES = []


class _Recorder:
    def __call__(self, number, name, passed, detail="", seconds=None):
        timing = f" [{seconds:.2f}s]" if seconds is not None else ""
        line = f"criterion {number:>2} {'PASS' if passed else 'FAIL'}: {name}{timing}"
        if detail:
            line += f" ({detail})"
        _LINES.append(line)
        print(line)
        return passed


@pytest.fixture(scope="session")
def criterion():
    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
