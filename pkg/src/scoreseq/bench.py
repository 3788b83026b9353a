"""Wall-clock benchmark suites written as CSV.

Suites:

* ``max-sweep``: seven scores scaled to a growing maximum.
* ``size-sweep``: maximum fixed at 28, number of scores growing.
* ``tables``: the published reference instances.

Each measurement is the median of ``reps`` runs on a monotonic clock.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .core import ExponentSet, ScoreSet, landau_check_grouped
from .datasets import ENUMERATION_SCORES, LARGE_INSTANCES, SMALL_INSTANCES
from .errors import ResourceLimitError

CSV_COLUMNS = ["suite", "n", "alpha_max", "algo", "elapsed_s", "states_or_nodes", "found"]
SUITES = ("max-sweep", "size-sweep", "tables")

MAX_SWEEP_TEMPLATE = (0, 10, 11, 18, 21, 22, 26)
MAX_SWEEP_ALPHAS = (13, 26, 52)
DENSE_ALPHA_LIMIT = 32
SIZE_SWEEP_ALPHA = 28
SIZE_SWEEP_NS = (1, 2, 3, 5, 7, 10, 14, 20, 29)


@dataclass
class RunRecord:
    suite: str
    score_set: ScoreSet
    algo: str
    found: bool | None
    """``None`` means the run ended in a resource error."""
    exponent_set: ExponentSet | None
    elapsed_s: float
    states_or_nodes: int

    def __post_init__(self):
        assert self.elapsed_s >= 0
        if self.found:
            assert self.exponent_set is not None
            assert landau_check_grouped(self.score_set, self.exponent_set)

    def row(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.score_set.n,
            "alpha_max": self.score_set.max,
            "algo": self.algo,
            "elapsed_s": f"{self.elapsed_s:.6f}",
            "states_or_nodes": self.states_or_nodes,
            "found": "error" if self.found is None else str(self.found).lower(),
        }


def scaled_set(alpha: int, template=MAX_SWEEP_TEMPLATE) -> ScoreSet:
    """The template scores stretched so the largest equals ``alpha``."""
    top = template[-1]
    scores = sorted({round(Fraction(alpha * t, top)) for t in template})
    if len(scores) != len(template):
        raise ValueError(f"alpha={alpha} collapses the template")
    return ScoreSet(scores)


def spread_set(n: int, alpha: int = SIZE_SWEEP_ALPHA) -> ScoreSet:
    """``n`` scores spread evenly over ``[0, alpha]`` (``{alpha}`` for n=1)."""
    if n == 1:
        return ScoreSet([alpha])
    return ScoreSet(sorted({(alpha * j + (n - 1) // 2) // (n - 1) for j in range(n)}))


def _run_dp(d: ScoreSet, layout: str = "sparse"):
    from .net import Mode, build_net

    net = build_net(d, Mode.FIRST_ONLY, layout=layout)
    e = next(net.chains()) if net.solvable else None
    return e, net.stats.total_states


def _run_fast(d: ScoreSet):
    from .fastsearch import search

    r = search(d)
    return r.exponent_set, r.nodes


def _run_oracle(d: ScoreSet):
    from .oracle import brute_force_all

    r = brute_force_all(d)
    return (r.solutions[0] if r.solutions else None), r.nodes_visited


ENGINES: dict[str, Callable] = {
    "dp": _run_dp,
    "dp-dense": lambda d: _run_dp(d, "dense"),
    "fast": _run_fast,
    "oracle": _run_oracle,
}


def measure(suite: str, d: ScoreSet, algo: str, reps: int = 3) -> RunRecord:
    fn = ENGINES[algo]
    times = []
    e, counter, found = None, 0, None
    for _ in range(reps):
        t0 = time.perf_counter()
        try:
            e, counter = fn(d)
            found = e is not None
        except ResourceLimitError:
            e, counter, found = None, 0, None
        times.append(time.perf_counter() - t0)
        if found is None:
            break
    return RunRecord(suite, d, algo, found, e, statistics.median(times), counter)


def suite_jobs(suite: str) -> Iterator[tuple[ScoreSet, str]]:
    if suite == "max-sweep":
        for alpha in MAX_SWEEP_ALPHAS:
            d = scaled_set(alpha)
            yield d, "dp"
            if alpha <= DENSE_ALPHA_LIMIT:
                yield d, "dp-dense"
            yield d, "fast"
    elif suite == "size-sweep":
        for n in SIZE_SWEEP_NS:
            d = spread_set(n)
            yield d, "dp"
            yield d, "fast"
    elif suite == "tables":
        d = ScoreSet(ENUMERATION_SCORES)
        for algo in ("dp", "fast", "oracle"):
            yield d, algo
        for scores, _ in SMALL_INSTANCES:
            yield ScoreSet(scores), "dp"
            yield ScoreSet(scores), "fast"
        for scores, _ in LARGE_INSTANCES:
            yield ScoreSet(scores), "fast"
    else:
        raise ValueError(f"unknown suite {suite!r}")


def run_suite(suite: str, reps: int = 3, jobs: Iterable | None = None) -> list[RunRecord]:
    jobs = suite_jobs(suite) if jobs is None else jobs
    return [measure(suite, d, algo, reps) for d, algo in jobs]


def write_csv(records: Iterable[RunRecord], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for r in records:
            writer.writerow(r.row())
