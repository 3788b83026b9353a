"""Closed-form feasibility bounds on a single multiplicity.

Appending ``x`` players of score ``a`` to a prefix with ``p`` players and
total score ``q`` keeps Landau's prefix inequality iff

    x**2 - h*x - c2 <= 0,   h = 2*(a - p) + 1,   c2 = 2*q - p*(p - 1)

so the largest admissible ``x`` is ``(h + sqrt(D)) / 2`` with
``D = h**2 + 4*c2``. Everything below works on exact integers.
"""

from __future__ import annotations

from typing import NamedTuple

from .core import PrefixState, as_score_set, isqrt


class BoundResult(NamedTuple):
    upper: int
    """Largest admissible multiplicity, 0 when none is."""
    delta: int
    """Discriminant ``h**2 + 8*(q - p*(p-1)/2)``."""
    exact: bool
    """True when ``upper`` is exactly the larger root of the quadratic."""


def _quad(x: int, h: int, c2: int) -> int:
    return x * x - h * x - c2


def upper_bound_xk(alpha_k: int, state) -> BoundResult:
    """Largest ``x_k`` keeping Landau's inequality after this layer.

    Infeasible states (negative slack or discriminant) give ``upper=0``
    rather than an error, since callers probe speculative states.
    """
    p, q = state
    h = 2 * (alpha_k - p) + 1
    c2 = 2 * q - p * (p - 1)
    delta = h * h + 4 * c2
    if c2 < 0 or delta < 0:
        return BoundResult(0, delta, False)
    r = isqrt(delta)
    x = (h + r) // 2
    # isqrt floors; correct locally against the quadratic itself
    while _quad(x + 1, h, c2) <= 0:
        x += 1
    while x > 0 and _quad(x, h, c2) > 0:
        x -= 1
    if x < 1:
        return BoundResult(0, delta, False)
    exact = r * r == delta and _quad(x, h, c2) == 0
    return BoundResult(x, delta, exact)


def exact_xn(alpha_n: int, state) -> int | None:
    """The unique last multiplicity closing the sequence, if any.

    The final layer must turn Landau's inequality into an equality, so
    the larger root of the quadratic has to be a positive integer.
    """
    p, q = state
    h = 2 * (alpha_n - p) + 1
    c2 = 2 * q - p * (p - 1)
    if c2 < 0:
        return None
    delta = h * h + 4 * c2
    r = isqrt(delta)
    if r * r != delta:
        return None
    # h is odd, so a square discriminant has an odd root and h + r is even
    assert r % 2 == 1 and (h + r) % 2 == 0
    x = (h + r) // 2
    return x if x >= 1 else None


def caps_ok(alpha_k: int, state) -> bool:
    p, q = state
    return p <= 2 * alpha_k + 1 and q <= alpha_k * (2 * alpha_k + 1)


def lookahead_feasible(k: int, x_k: int, state, score_set) -> bool:
    """Necessary test for ``x_k`` at 1-based layer ``k``.

    Fixes every later multiplicity to 1 and checks that each later layer
    still admits at least one player. Passing does not guarantee that the
    prefix extends to a full score sequence.
    """
    d = as_score_set(score_set)
    p, q = state
    return state_lookahead_ok(k, (p + x_k, q + x_k * d[k - 1]), d)


def state_lookahead_ok(k: int, state, score_set) -> bool:
    """:func:`lookahead_feasible` phrased on the state reached after layer ``k``."""
    p, q = state
    if 2 * q < p * (p - 1):
        return False
    for alpha in score_set.scores[k:]:
        # upper_bound_xk(alpha, (p, q)).upper >= 1  <=>  one more player fits
        p += 1
        q += alpha
        if 2 * q < p * (p - 1):
            return False
    return True


__all__ = [
    "BoundResult",
    "PrefixState",
    "caps_ok",
    "exact_xn",
    "lookahead_feasible",
    "state_lookahead_ok",
    "upper_bound_xk",
]
