"""Residue machinery modulo ``M = a_n - a_{n-1}``.

For a valid score sequence some ``f <= a_n`` satisfies

    (2*a_n + 1 - 2*f) * f == sum_{i<n} (a_n - a_i) * x_i

Reducing both sides mod ``M`` gives cheap necessary conditions on any
prefix of multiplicities; they are what the fast search prunes with.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import as_exponent_set, as_score_set, ExponentSet, ScoreSet
from .errors import InputError


@dataclass(frozen=True)
class ModularContext:
    """Residue tables for one score set.

    ``sol[i]`` is the residue of the left-hand side for ``f = i (mod M)``,
    ``grp[i-1]`` the residue of ``a_n - a_i`` and ``mingen[i-1]`` the gcd of
    ``grp[i-1:]`` together with ``M``: the generator of the subgroup that
    multiplicities ``i..n-1`` can still reach.
    """

    modulus: int
    sol: tuple[int, ...]
    grp: tuple[int, ...]
    mingen: tuple[int, ...]

    def m(self, i: int) -> int:
        """1-based ``mingen`` lookup; ``m(n)`` is the modulus itself."""
        if i == len(self.mingen) + 1:
            return self.modulus
        return self.mingen[i - 1]


def build_context(score_set) -> ModularContext:
    d = as_score_set(score_set)
    if d.n < 2:
        raise InputError("modular context needs at least two scores")
    a_n = d.max
    mod = a_n - d[-2]
    sol = tuple(((2 * a_n + 1 - 2 * i) * i) % mod for i in range(mod))
    grp = tuple((a_n - a) % mod for a in d.scores[:-1])
    mingen = [0] * len(grp)
    g = mod
    for i in range(len(grp) - 1, -1, -1):
        g = math.gcd(grp[i], g)
        mingen[i] = g
    return ModularContext(mod, sol, grp, tuple(mingen))


def shift_sol(ctx: ModularContext, total: int) -> list[int]:
    """``sol`` with ``total`` subtracted elementwise, indices preserved."""
    mod = ctx.modulus
    return [(s - total) % mod for s in ctx.sol]


def potential(shifted: Sequence[int], m: int) -> bool:
    """True iff some residue is a multiple of ``m``."""
    for s in shifted:
        # m == 0 cannot occur (m divides M >= 1); kept for fidelity
        if (s == 0 and m == 0) or (m != 0 and s % m == 0):
            return True
    return False


def check_f_witness(score_set, exponent_set) -> int | None:
    """Smallest ``f`` in ``[0, a_n]`` with ``(2a_n+1-2f)f == sum (a_n-a_i)x_i``."""
    d: ScoreSet = as_score_set(score_set)
    e: ExponentSet = as_exponent_set(exponent_set)
    if len(d) != len(e):
        raise InputError("length mismatch")
    a_n = d.max
    rhs = sum((a_n - a) * x for a, x in zip(d.scores[:-1], e.exponents[:-1]))
    for f in range((2 * a_n + 1) // 2 + 1):
        if (2 * a_n + 1 - 2 * f) * f == rhs:
            return f
    return None


class ResidueIndex:
    """Lookup tables equivalent to :func:`shift_sol` + :func:`potential`.

    Because every ``mingen`` value divides ``M``, a shifted entry is a
    multiple of ``m`` exactly when ``sol[i] == total (mod m)``; so the
    per-node test becomes one set lookup instead of a pass over ``sol``.
    """

    def __init__(self, ctx: ModularContext):
        self.ctx = ctx
        self._by_mod: dict[int, frozenset[int]] = {}
        for m in set(ctx.mingen) | {ctx.modulus}:
            self._by_mod[m] = frozenset(s % m for s in ctx.sol)
        zeros: dict[int, list[int]] = {}
        for i, s in enumerate(ctx.sol):
            zeros.setdefault(s, []).append(i)
        self._zeros = zeros

    def potential(self, total: int, m: int) -> bool:
        return total % m in self._by_mod[m]

    def zero_indices(self, total: int) -> list[int]:
        """Ascending indices ``i`` where ``shift_sol(ctx, total)[i] == 0``."""
        return self._zeros.get(total % self.ctx.modulus, [])
