"""Input validation helpers for the estimator interface."""

from __future__ import annotations

from typing import Iterable

from .core import ExponentSet, ScoreSet, as_exponent_set, as_score_set
from .errors import InputError


def check_score_set(value) -> ScoreSet:
    """Coerce ``value`` (ScoreSet, sequence, or comma string) to a ScoreSet."""
    if isinstance(value, str):
        from .cli import parse_ints

        value = parse_ints(value)
    return as_score_set(value)


def check_score_sets(X: Iterable) -> list[ScoreSet]:
    """Validate a batch of score sets.

    A single flat sequence of integers is rejected rather than silently
    treated as a batch of one-element sets.
    """
    if isinstance(X, (str, ScoreSet)):
        raise InputError("expected a batch of score sets, got a single one")
    out = []
    for row in X:
        if isinstance(row, int):
            raise InputError("expected a batch of score sets, got a flat integer sequence")
        out.append(check_score_set(row))
    return out


def check_exponent_set(value, score_set=None) -> ExponentSet:
    e = as_exponent_set(value)
    if score_set is not None and len(e) != len(check_score_set(score_set)):
        raise InputError("exponent set length does not match the score set")
    return e
