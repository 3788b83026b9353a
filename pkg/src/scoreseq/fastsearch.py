"""Depth-first reconstruction pruned by residues modulo ``a_n - a_{n-1}``.

Multiplicities ``x_1..x_{n-2}`` are chosen in ascending order within the
closed-form bound; a branch is abandoned as soon as the residues can no
longer be completed by the remaining generators. The last two
multiplicities are then solved in closed form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .bounds import exact_xn, upper_bound_xk
from .core import ExponentSet, ScoreSet, as_score_set, landau_check_grouped
from .errors import ResourceLimitError
from .modular import ModularContext, ResidueIndex, build_context

log = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10**7


def end_phase(ctx: ModularContext, f_index: int, state, score_set, *, debug: bool = False):
    """Solve ``(x_{n-1}, x_n)`` for the ``f = f_index (mod M)`` family.

    ``state`` is the prefix through layer ``n-2``. Returns ``None`` when no
    ``f`` in the family yields admissible multiplicities.
    """
    d = as_score_set(score_set)
    a_n, a_prev = d[-1], d[-2]
    mod = ctx.modulus
    p, q = state
    # closed form of sum_{j<=n-2} (a_n - a_j) x_j
    partial = p * a_n - q
    if debug:
        assert partial >= 0
    bound2 = upper_bound_xk(a_prev, state).upper
    f = f_index
    while f <= (2 * a_n + 1) // 2:
        num = (2 * a_n + 1 - 2 * f) * f - partial
        if num > 0 and num % mod == 0:
            x1 = num // mod
            if x1 <= bound2:
                x2 = exact_xn(a_n, (p + x1, q + x1 * a_prev))
                if x2 is not None:
                    return x1, x2
        f += mod
    return None


@dataclass
class FastResult:
    exponent_set: ExponentSet | None
    nodes: int
    end_calls: int


def search(
    score_set,
    *,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
    prune: bool = True,
    debug: bool = False,
) -> FastResult:
    """Run the pruned DFS and report the first exponent set found.

    ``prune=False`` replaces the residue test with an always-true
    predicate; the answer is unchanged, only the node count grows.
    Raises :class:`ResourceLimitError` once ``node_budget`` nodes were
    visited without a decision.
    """
    d: ScoreSet = as_score_set(score_set)
    n = d.n
    if n == 1:
        return FastResult(ExponentSet([2 * d[0] + 1]), 1, 0)
    ctx = build_context(d)
    index = ResidueIndex(ctx)
    mod = ctx.modulus
    xs = [0] * n
    nodes = 0
    end_calls = 0

    # iterative DFS; frame = [layer, p, q, residue total, next x, bound]
    stack = [[1, 0, 0, 0, 1, None]]
    while stack:
        frame = stack[-1]
        layer, p, q, total = frame[0], frame[1], frame[2], frame[3]
        if frame[5] is None:
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise ResourceLimitError(f"fast search exceeded {node_budget} nodes")
            if layer >= n - 1:
                for i in index.zero_indices(total):
                    end_calls += 1
                    tail = end_phase(ctx, i, (p, q), d, debug=debug)
                    if tail is not None:
                        xs[n - 2], xs[n - 1] = tail
                        e = ExponentSet(xs)
                        assert landau_check_grouped(d, e)
                        return FastResult(e, nodes, end_calls)
                stack.pop()
                continue
            frame[5] = upper_bound_xk(d[layer - 1], (p, q)).upper
        x = frame[4]
        if x > frame[5]:
            stack.pop()
            continue
        frame[4] = x + 1
        new_total = (total + ctx.grp[layer - 1] * x) % mod
        if prune and not index.potential(new_total, ctx.m(layer + 1)):
            continue
        xs[layer - 1] = x
        alpha = d[layer - 1]
        stack.append([layer + 1, p + x, q + x * alpha, new_total, 1, None])
    log.debug("fast search exhausted after %d nodes", nodes)
    return FastResult(None, nodes, end_calls)


def reconstruct_fast(score_set, **options) -> ExponentSet | None:
    """First exponent set found by the pruned DFS, ``None`` if none exists."""
    return search(score_set, **options).exponent_set
