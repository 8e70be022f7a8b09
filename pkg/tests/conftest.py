import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> (title, seconds, limit, [(check, ok)])
ACCEPTANCE: dict[int, tuple] = {}


class Criterion:
    """Collects named sub-checks for one acceptance criterion."""

    def __init__(self, number: int, title: str, limit: float):
        self.number, self.title, self.limit = number, title, limit
        self.checks: list[tuple[str, bool]] = []
        self.t0 = time.monotonic()

    def check(self, name: str, ok) -> bool:
        self.checks.append((name, bool(ok)))
        return bool(ok)

    def close(self) -> float:
        elapsed = time.monotonic() - self.t0
        self.check(f"runtime {elapsed:.1f}s < {self.limit:g}s", elapsed < self.limit)
        ACCEPTANCE[self.number] = (self.title, elapsed, self.limit, list(self.checks))
        return elapsed

    def failed(self, known: set[str] = frozenset()) -> list[str]:
        return [name for name, ok in self.checks if not ok and name not in known]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, elapsed, limit, checks = ACCEPTANCE[n]
        bad = [name for name, ok in checks if not ok]
        state = "PASS" if not bad else "FAIL"
        line = f"criterion {n:>2}: {state}  {title}  ({len(checks) - len(bad)}/{len(checks)} checks, {elapsed:.1f}s)"
        tr.write_line(line)
        for name in bad:
            tr.write_line(f"    failed: {name}")
