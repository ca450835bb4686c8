import random
from pathlib import Path

import pytest

from nullcone_motives.quiver import Quiver

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def random_quiver(rng: random.Random, n: int, max_mult: int, *, acyclic: bool = False, max_arrows=None) -> Quiver:
    """Random quiver on ``n`` vertices; acyclic ones only use arrows i -> j with i < j."""
    verts = [f"v{k}" for k in range(n)]
    r = [[0] * n for _ in range(n)]
    budget = max_arrows
    cells = [(i, j) for i in range(n) for j in range(n) if not acyclic or i < j]
    rng.shuffle(cells)
    for i, j in cells:
        m = rng.randint(0, max_mult)
        if budget is not None:
            m = min(m, budget)
            budget -= m
        r[i][j] = m
    return Quiver(tuple(verts), tuple(tuple(row) for row in r))


_ACCEPTANCE: list = []


@pytest.fixture
def acceptance_report():
    """Collects one verdict line per acceptance criterion, echoed in the terminal summary."""

    def record(number: int, title: str, ok: bool, detail: str = ""):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}: {title}"
        if detail:
            line += f" ({detail})"
        _ACCEPTANCE.append((number, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_ACCEPTANCE):
        terminalreporter.write_line(line)
