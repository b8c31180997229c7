import time

import pytest

_RESULTS: list[tuple[str, str, float, str]] = []


class _Criterion:
    def __init__(self, name: str, limit: float | None):
        self.name = name
        self.limit = limit
        self.detail = ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and (self.limit is None or elapsed < self.limit)
        _RESULTS.append((self.name, "PASS" if ok else "FAIL", elapsed, self.detail or (str(exc) if exc else "")))
        if exc_type is None and not ok:
            pytest.fail(f"{self.name}: took {elapsed:.2f}s, limit {self.limit}s")
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, elapsed, detail in _RESULTS:
        terminalreporter.write_line(f"{status}  {name}  ({elapsed:.2f}s)  {detail}".rstrip())
