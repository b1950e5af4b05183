import pytest

_results: dict[int, str] = {}


@pytest.fixture
def criterion():
    """record(n, ok, detail): one summary line per acceptance criterion."""

    def record(n: int, ok: bool, detail: str) -> bool:
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
        _results[n] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_results):
            terminalreporter.write_line(_results[n])
