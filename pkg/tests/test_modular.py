import math

import pytest
from hypothesis import given, strategies as st

from scoreseq.bounds import upper_bound_xk
from scoreseq.errors import InputError
from scoreseq.modular import (
    ResidueIndex,
    build_context,
    check_f_witness,
    potential,
    shift_sol,
)


def test_context_examples():
    ctx = build_context([2, 4, 7, 14])
    assert ctx.modulus == 7
    assert ctx.sol == (0, 6, 1, 6, 0, 4, 4)
    assert ctx.grp == (5, 3, 0)
    assert ctx.mingen == (1, 1, 7)

    ctx = build_context([0, 1, 3, 5])
    assert (ctx.modulus, ctx.sol, ctx.grp, ctx.mingen) == (2, (0, 1), (1, 0, 0), (1, 2, 2))


def test_unit_modulus_collapses():
    ctx = build_context([0, 3, 8, 9])
    assert ctx.modulus == 1 and ctx.sol == (0,)
    assert set(ctx.grp) == {0} and set(ctx.mingen) == {1}


def test_context_needs_two_scores():
    with pytest.raises(InputError):
        build_context([4])


def test_shift_examples():
    assert shift_sol(build_context([0, 1, 3, 5]), 1) == [1, 0]
    ctx = build_context([2, 4, 7, 14])
    assert shift_sol(ctx, 0) == list(ctx.sol)
    assert shift_sol(ctx, 5) == [2, 1, 3, 1, 2, 6, 6]


def test_potential_examples():
    assert potential([1, 0], 2)
    assert potential([5, 0, 3], 4)
    assert not potential([2, 1, 3, 1, 2, 6, 6], 7)


def test_f_witness_examples():
    assert check_f_witness([0, 1, 3, 5], [1, 1, 3, 1]) == 3
    assert check_f_witness([0], [1]) == 0
    # sum (14 - a_i) x_i = 104 = (29 - 16) * 8
    assert check_f_witness([2, 4, 7, 14], [2, 1, 10, 3]) == 8


score_sets = st.sets(st.integers(0, 60), min_size=2, max_size=8).map(sorted)


@given(score_sets)
def test_mingen_chain(scores):
    ctx = build_context(scores)
    n = len(scores)
    assert len(ctx.sol) == ctx.modulus and ctx.sol[0] == 0
    assert ctx.grp[-1] == 0
    for i in range(1, n):
        assert ctx.m(i) == math.gcd(ctx.grp[i - 1], ctx.m(i + 1))
        assert ctx.modulus % ctx.m(i) == 0


@given(score_sets, st.integers(0, 10**6))
def test_residue_index_equivalent(scores, total):
    ctx = build_context(scores)
    idx = ResidueIndex(ctx)
    shifted = shift_sol(ctx, total)
    for m in set(ctx.mingen) | {ctx.modulus}:
        assert idx.potential(total, m) == potential(shifted, m)
    assert idx.zero_indices(total) == [i for i, s in enumerate(shifted) if s == 0]


def test_necessary_conditions_on_grid(grid):
    for scores, sols in grid.items():
        if len(scores) < 2:
            continue
        ctx = build_context(scores)
        for e in sols:
            assert check_f_witness(scores, e) is not None
            total = sum(g * x for g, x in zip(ctx.grp, e))
            assert total % ctx.modulus in ctx.sol


def test_pruning_safety_on_grid(grid):
    """A prefix rejected by potential() never extends to an oracle solution."""
    rejected = 0
    for scores, sols in grid.items():
        n = len(scores)
        if n < 3:
            continue
        ctx = build_context(scores)
        prefixes = {e[:k] for e in sols for k in range(1, n - 1)}

        def walk(k, p, q, total, prefix):
            nonlocal rejected
            # k is the 1-based layer being assigned, k <= n-2
            a = scores[k - 1]
            for x in range(1, upper_bound_xk(a, (p, q)).upper + 1):
                t = (total + ctx.grp[k - 1] * x) % ctx.modulus
                pre = prefix + (x,)
                if not potential(shift_sol(ctx, t), ctx.m(k + 1)):
                    rejected += 1
                    assert pre not in prefixes, (scores, pre)
                elif k < n - 2:
                    walk(k + 1, p + x, q + a * x, t, pre)

        walk(1, 0, 0, 0, ())
    assert rejected > 0
