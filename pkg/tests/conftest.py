import time
from contextlib import contextmanager

import pytest

_RESULTS = []


@pytest.fixture
def criterion():
    """Time a named acceptance criterion against its runtime budget."""

    @contextmanager
    def _criterion(name: str, budget: float):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - t0
            _RESULTS.append((name, ok and elapsed <= budget, elapsed, budget))
        assert elapsed <= budget, f"{name}: {elapsed:.2f}s over the {budget:.0f}s budget"

    return _criterion


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for name, ok, elapsed, budget in _RESULTS:
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"[acceptance] {name}: {status} ({elapsed:.2f}s, budget {budget:.0f}s)")
