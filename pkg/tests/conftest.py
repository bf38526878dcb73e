from __future__ import annotations

import pytest

from wordrep.catalog import load_builtin
from wordrep.miner import MiningParams, enumerate_reduced

# acceptance tests append (criterion, passed, detail); printed after the run
ACCEPTANCE_LINES: list[tuple[int, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def d1():
    return load_builtin("D1").graph


@pytest.fixture(scope="session")
def small_corpus():
    """Reduced split graphs with at most 9 vertices."""
    return list(enumerate_reduced(MiningParams(6, 8, max_vertices=9)))
