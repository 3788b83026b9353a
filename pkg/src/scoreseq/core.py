"""Domain types, exact integer helpers and the two Landau verifiers.

A tournament score sequence is described here in grouped form: a
:class:`ScoreSet` holding the distinct scores ``a_1 < ... < a_n`` and an
:class:`ExponentSet` holding how many players ``x_i >= 1`` own each score.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import InputError, InputRangeError

MAX_SCORE = 2**30


def _as_int_tuple(values: Iterable[int], what: str) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool):
            raise InputError(f"{what} must contain integers, got {v!r}")
        try:
            out.append(operator.index(v))
        except TypeError:
            raise InputError(f"{what} must contain integers, got {v!r}") from None
    return tuple(out)


@dataclass(frozen=True)
class ScoreSet:
    """Strictly increasing nonnegative distinct scores."""

    scores: tuple[int, ...]

    def __init__(self, scores: Iterable[int]):
        scores = _as_int_tuple(scores, "score set")
        if not scores:
            raise InputError("score set must be nonempty")
        if scores[0] < 0:
            raise InputError("scores must be nonnegative")
        for a, b in zip(scores, scores[1:]):
            if a >= b:
                raise InputError(f"scores must be strictly increasing ({a} >= {b})")
        if scores[-1] > MAX_SCORE:
            raise InputRangeError(f"largest score {scores[-1]} exceeds 2**30")
        object.__setattr__(self, "scores", scores)

    def __len__(self) -> int:
        return len(self.scores)

    def __iter__(self):
        return iter(self.scores)

    def __getitem__(self, i):
        return self.scores[i]

    @property
    def n(self) -> int:
        return len(self.scores)

    @property
    def max(self) -> int:
        return self.scores[-1]

    def __str__(self) -> str:
        return ",".join(map(str, self.scores))


@dataclass(frozen=True)
class ExponentSet:
    """Multiplicities ``x_i >= 1`` paired position-wise with a score set."""

    exponents: tuple[int, ...]

    def __init__(self, exponents: Iterable[int]):
        exponents = _as_int_tuple(exponents, "exponent set")
        if any(x < 1 for x in exponents):
            raise InputError("every exponent must be >= 1")
        object.__setattr__(self, "exponents", exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __getitem__(self, i):
        return self.exponents[i]

    @property
    def players(self) -> int:
        return sum(self.exponents)

    def __str__(self) -> str:
        return ",".join(map(str, self.exponents))


class PrefixState(NamedTuple):
    """Players ``p`` and total score ``q`` accumulated over a prefix."""

    p: int
    q: int


@dataclass(frozen=True)
class ScoreSequence:
    """A (score set, exponent set) pair.

    Use :meth:`verified` to build one that is guaranteed to be realizable.
    """

    score_set: ScoreSet
    exponent_set: ExponentSet

    @classmethod
    def verified(cls, score_set, exponent_set) -> "ScoreSequence":
        score_set = as_score_set(score_set)
        exponent_set = as_exponent_set(exponent_set)
        if not landau_check_grouped(score_set, exponent_set):
            raise InputError(f"({score_set}) x ({exponent_set}) is not a score sequence")
        return cls(score_set, exponent_set)

    @property
    def players(self) -> int:
        return self.exponent_set.players

    def expand(self) -> list[int]:
        return expand(self.score_set, self.exponent_set)


def as_score_set(value) -> ScoreSet:
    return value if isinstance(value, ScoreSet) else ScoreSet(value)


def as_exponent_set(value) -> ExponentSet:
    return value if isinstance(value, ExponentSet) else ExponentSet(value)


def _pair(score_set, exponent_set) -> tuple[ScoreSet, ExponentSet]:
    d, e = as_score_set(score_set), as_exponent_set(exponent_set)
    if len(d) != len(e):
        raise InputError(f"length mismatch: {len(d)} scores vs {len(e)} exponents")
    return d, e


def expand(score_set, exponent_set) -> list[int]:
    """Flatten grouped form into the nondecreasing score sequence."""
    d, e = _pair(score_set, exponent_set)
    out: list[int] = []
    for a, x in zip(d, e):
        out.extend([a] * x)
    return out


def landau_check(seq: Sequence[int]) -> bool:
    """Landau's criterion on a flat nondecreasing sequence."""
    seq = _as_int_tuple(seq, "sequence")
    if any(s < 0 for s in seq):
        raise InputError("scores must be nonnegative")
    if any(a > b for a, b in zip(seq, seq[1:])):
        raise InputError("sequence must be nondecreasing")
    total = 0
    for k, s in enumerate(seq, start=1):
        total += s
        if total < k * (k - 1) // 2:
            return False
    m = len(seq)
    return total == m * (m - 1) // 2


def first_violation(score_set, exponent_set) -> int | None:
    """Return the first 1-based index ``k`` whose grouped prefix fails.

    A failure of the final equality is reported at ``k = n``. ``None``
    means the pair is a valid score sequence.
    """
    d, e = _pair(score_set, exponent_set)
    p = q = 0
    for k, (a, x) in enumerate(zip(d, e), start=1):
        p += x
        q += a * x
        if q < p * (p - 1) // 2:
            return k
    if q != p * (p - 1) // 2:
        return len(d)
    return None


def landau_check_grouped(score_set, exponent_set) -> bool:
    """Landau's criterion evaluated only at group boundaries."""
    return first_violation(score_set, exponent_set) is None


def isqrt(x: int) -> int:
    """Exact floor square root."""
    if x < 0:
        raise InputError("isqrt of a negative number")
    return math.isqrt(x)


def is_perfect_square(x: int) -> bool:
    if x < 0:
        return False
    r = math.isqrt(x)
    return r * r == x
