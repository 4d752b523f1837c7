import sys
import os

sys.path.insert(0, os.path.dirname(__file__))

_RESULTS = []


def record_criterion(num: int, label: str, ok: bool, elapsed: float, budget: float):
    _RESULTS.append((num, label, ok, elapsed, budget))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, label, ok, elapsed, budget in sorted(_RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"criterion {num} ({label}): {status} in {elapsed:.1f}s (budget {budget:.0f}s)"
        )
