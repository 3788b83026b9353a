"""Command-line interface.

Exit codes: 0 found/valid, 1 not found/invalid, 2 usage or parse error,
3 resource limit (range guard, state or node budget).
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from dataclasses import asdict, dataclass
from typing import Sequence

from . import bench
from .core import ExponentSet, ScoreSet, first_violation, landau_check_grouped
from .errors import InputError, InputRangeError, ResourceLimitError

EXIT_OK, EXIT_NOT_FOUND, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

log = logging.getLogger("scoreseq")


@dataclass
class ReconstructionReport:
    """JSON shape emitted by ``reconstruct``."""

    scores: list[int]
    exponents: list[int] | None
    players: int | None
    algorithm: str
    elapsed_s: float

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    @classmethod
    def from_json(cls, text: str) -> "ReconstructionReport":
        return cls(**json.loads(text))


def parse_ints(text: str) -> list[int]:
    text = text.strip().strip("{}[]")
    if not text:
        return []
    try:
        return [int(tok) for tok in text.replace(" ", ",").split(",") if tok]
    except ValueError:
        raise InputError(f"cannot parse integer list from {text!r}") from None


def _checked(d: ScoreSet, e: ExponentSet) -> ExponentSet:
    # belt and braces: nothing reaches stdout unverified
    if not landau_check_grouped(d, e):
        raise AssertionError(f"refusing to emit invalid {e} for {d}")
    return e


def _solve(d: ScoreSet, algo: str, args) -> ExponentSet | None:
    if algo == "fast":
        from .fastsearch import reconstruct_fast

        return reconstruct_fast(d, node_budget=args.node_budget)
    from .net import reconstruct_one

    return reconstruct_one(d, max_states=args.max_states)


def cmd_verify(args) -> int:
    scores = args.scores if args.scores is not None else args.pos_scores
    exponents = args.exponents if args.exponents is not None else args.pos_exponents
    if scores is None or exponents is None:
        raise InputError("verify needs both scores and exponents")
    d, e = ScoreSet(parse_ints(scores)), ExponentSet(parse_ints(exponents))
    k = first_violation(d, e)
    if args.format == "json":
        print(json.dumps({"scores": list(d), "exponents": list(e), "valid": k is None,
                          "violated_prefix": k}))
    elif k is None:
        print(f"valid: {e.players} players")
    else:
        print(f"invalid: Landau condition fails at k={k}")
    return EXIT_OK if k is None else EXIT_NOT_FOUND


def _reconstruct_line(d: ScoreSet, args) -> int:
    t0 = time.perf_counter()
    e = _solve(d, args.algo, args)
    elapsed = time.perf_counter() - t0
    if args.format == "json":
        if e is not None:
            _checked(d, e)
        report = ReconstructionReport(
            list(d), None if e is None else list(e), None if e is None else e.players,
            args.algo, elapsed,
        )
        print(report.to_json())
    elif e is None:
        print("no valid exponent set exists")
    else:
        print(_checked(d, e))
    return EXIT_OK if e is not None else EXIT_NOT_FOUND


def _read_batch(path: str) -> list[str]:
    if path == "-":
        return [ln for ln in sys.stdin.read().splitlines() if ln.strip()]
    with open(path) as fh:
        return [ln for ln in fh.read().splitlines() if ln.strip()]


def cmd_reconstruct(args) -> int:
    if args.batch is None:
        if args.scores is None:
            raise InputError("reconstruct needs a score set or --batch")
        return _reconstruct_line(ScoreSet(parse_ints(args.scores)), args)
    status = EXIT_OK
    for line in _read_batch(args.batch):
        try:
            code = _reconstruct_line(ScoreSet(parse_ints(line)), args)
        except ResourceLimitError as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = EXIT_RESOURCE
        status = max(status, code)
    return status


def cmd_enumerate(args) -> int:
    from .net import enumerate_all

    d = ScoreSet(parse_ints(args.scores))
    result = enumerate_all(d, limit=args.limit, max_states=args.max_states)
    sets = result.exponent_sets
    if args.format == "json":
        payload = {
            "scores": list(d),
            "exponent_sets": [list(_checked(d, e)) for e in sets],
            "count": len(sets),
            "truncated": result.truncated,
        }
        print(json.dumps(payload))
    else:
        for e in sets:
            print(_checked(d, e))
        print(f"# count={len(sets)} truncated={str(result.truncated).lower()}")
    return EXIT_OK if sets else EXIT_NOT_FOUND


def cmd_oracle(args) -> int:
    from .oracle import brute_force_all

    d = ScoreSet(parse_ints(args.scores))
    report = brute_force_all(d)
    if args.format == "json":
        print(json.dumps({
            "scores": list(d),
            "exponent_sets": [list(e) for e in report.solutions],
            "count": len(report.solutions),
            "nodes_visited": report.nodes_visited,
        }))
    else:
        for e in report.solutions:
            print(_checked(d, e))
        print(f"# count={len(report.solutions)} nodes={report.nodes_visited}")
    return EXIT_OK if report.solutions else EXIT_NOT_FOUND


def cmd_reid_scan(args) -> int:
    from .oracle import reid_scan

    summary = reid_scan(args.max, engine=args.engine, workers=args.workers, limit=args.limit)
    print(f"{summary.ok}/{summary.checked} score sets solvable")
    for d in summary.failures:
        print(f"FAILED: {d}")
    return EXIT_OK if not summary.failures else EXIT_NOT_FOUND


def cmd_bench(args) -> int:
    try:
        open(args.out, "a").close()
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    records = bench.run_suite(args.suite, reps=args.reps)
    bench.write_csv(records, args.out)
    print(f"wrote {len(records)} rows to {args.out}")
    return EXIT_OK


def generate_score_set(n: int, alpha_max: int, seed: int | None = None) -> ScoreSet:
    """``n`` distinct scores drawn uniformly from ``[0, alpha_max]``."""
    if n < 1:
        raise InputError("n must be >= 1")
    if n > alpha_max + 1:
        raise InputError(f"cannot draw {n} distinct scores from [0, {alpha_max}]")
    rng = random.Random(seed)
    return ScoreSet(sorted(rng.sample(range(alpha_max + 1), n)))


def cmd_gen(args) -> int:
    print(generate_score_set(args.n, args.alpha_max, args.seed))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scoreseq",
        description="Reconstruct tournament score sequences from score sets.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("verify", help="check a (scores, exponents) pair")
    p.add_argument("pos_scores", nargs="?", metavar="SCORES")
    p.add_argument("pos_exponents", nargs="?", metavar="EXPONENTS")
    p.add_argument("--scores")
    p.add_argument("--exponents")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reconstruct", help="find one exponent set")
    p.add_argument("scores", nargs="?", help="comma-separated score set")
    p.add_argument("--algo", choices=("dp", "fast"), default="dp")
    p.add_argument("--batch", metavar="FILE", help="one score set per line; '-' for stdin")
    p.add_argument("--node-budget", type=int, default=10**7)
    p.add_argument("--max-states", type=int, default=2_000_000)
    fmt(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("enumerate", help="list every exponent set")
    p.add_argument("scores")
    p.add_argument("--limit", type=int)
    p.add_argument("--max-states", type=int, default=2_000_000)
    fmt(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("oracle", help="brute-force every exponent set")
    p.add_argument("scores")
    fmt(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("reid-scan", help="solve every subset of {0..max}")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--engine", choices=("dp", "fast", "oracle"), default="dp")
    p.add_argument("--workers", type=int)
    p.add_argument("--limit", type=int, default=12, help="refuse --max above this")
    p.set_defaults(func=cmd_reid_scan)

    p = sub.add_parser("bench", help="run a timing suite and write CSV")
    p.add_argument("--suite", choices=bench.SUITES, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--reps", type=int, default=3)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="draw a random score set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha-max", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (InputRangeError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
