from functools import lru_cache
from itertools import combinations

import pytest

from scoreseq.oracle import brute_force_all

GRID_MAX_N = 4
GRID_MAX_ALPHA = 15


def grid_score_sets():
    """Every score set with at most 4 scores, all at most 15."""
    for n in range(1, GRID_MAX_N + 1):
        yield from combinations(range(GRID_MAX_ALPHA + 1), n)


@lru_cache(maxsize=None)
def oracle_solutions(scores: tuple) -> frozenset:
    return frozenset(e.exponents for e in brute_force_all(scores).solutions)


@pytest.fixture(scope="session")
def grid():
    return {d: oracle_solutions(d) for d in grid_score_sets()}


# one pass/fail line per acceptance criterion in the terminal summary
_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    num, title = marker.args
    failed = call.excinfo is not None
    prev = _criteria.get(num)
    status = "FAIL" if failed or (prev and prev[1] == "FAIL") else "PASS"
    _criteria[num] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, status = _criteria[num]
        terminalreporter.write_line(f"[{status}] criterion {num}: {title}")
