"""Brute-force ground truth and the small-scale Reid scan.

The brute force deliberately shares nothing with the bounds, net or fast
search code: it enumerates multiplicities and asks only Landau's grouped
criterion.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .core import ExponentSet, ScoreSet, as_score_set, landau_check_grouped
from .errors import InputError, ResourceLimitError

SEARCH_SPACE_GUARD = 10**8
REID_MAX_DEFAULT = 12
WORKERS_ENV = "SCORESEQ_WORKERS"


@dataclass
class OracleReport:
    score_set: ScoreSet
    solutions: list[ExponentSet]
    nodes_visited: int


def search_space(score_set) -> int:
    return math.prod(2 * a + 1 for a in as_score_set(score_set))


def brute_force_all(score_set, *, guard: int | None = SEARCH_SPACE_GUARD) -> OracleReport:
    """All exponent sets of ``score_set`` by exhaustive enumeration.

    Each ``x_k`` ranges over ``1..2a_k+1`` subject to ``p_k <= 2a_k+1``.
    Prefixes already violating Landau's inequality are cut, which is
    Landau's criterion itself evaluated early. Survivors are re-checked
    with :func:`landau_check_grouped`.
    """
    d = as_score_set(score_set)
    if guard is not None and search_space(d) > guard:
        raise ResourceLimitError(f"search space {search_space(d)} exceeds guard {guard}")
    n = d.n
    scores = d.scores
    xs = [0] * n
    solutions: list[ExponentSet] = []
    nodes = 0

    def rec(k: int, p: int, q: int) -> None:
        nonlocal nodes
        a = scores[k]
        cap = 2 * a + 1
        for x in range(1, cap - p + 1):
            nodes += 1
            p2, q2 = p + x, q + x * a
            if 2 * q2 < p2 * (p2 - 1):
                continue
            xs[k] = x
            if k == n - 1:
                if 2 * q2 == p2 * (p2 - 1) and landau_check_grouped(d, xs):
                    solutions.append(ExponentSet(xs))
            else:
                rec(k + 1, p2, q2)

    rec(0, 0, 0)
    solutions.sort(key=lambda e: e.exponents)
    return OracleReport(d, solutions, nodes)


@dataclass
class ReidSummary:
    max_score: int
    checked: int = 0
    failures: list[ScoreSet] = field(default_factory=list)

    @property
    def ok(self) -> int:
        return self.checked - len(self.failures)


def _solve(args):
    scores, engine = args
    if engine == "fast":
        from .fastsearch import reconstruct_fast as solve
    elif engine == "oracle":
        def solve(d):
            sols = brute_force_all(d, guard=None).solutions
            return sols[0] if sols else None
    else:
        from .net import reconstruct_one as solve
    e = solve(scores)
    return e is not None and landau_check_grouped(scores, e)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def reid_scan(
    max_score: int,
    *,
    engine: str = "dp",
    workers: int | None = None,
    limit: int | None = REID_MAX_DEFAULT,
) -> ReidSummary:
    """Reconstruct every nonempty subset of ``{0..max_score}``.

    Failures are collected in subset order; Yao's theorem says there
    should be none.
    """
    if max_score < 0:
        raise InputError("max_score must be >= 0")
    if limit is not None and max_score > limit:
        raise ResourceLimitError(f"max_score {max_score} above desk-scale limit {limit}")
    if engine not in ("dp", "fast", "oracle"):
        raise InputError(f"unknown engine {engine!r}")
    universe = range(max_score + 1)
    subsets = [
        ScoreSet(c) for r in range(1, max_score + 2) for c in combinations(universe, r)
    ]
    workers = default_workers() if workers is None else workers
    jobs = [(d, engine) for d in subsets]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_solve, jobs, chunksize=64))
    else:
        results = [_solve(job) for job in jobs]
    summary = ReidSummary(max_score, checked=len(subsets))
    summary.failures = [d for d, ok in zip(subsets, results) if not ok]
    return summary
