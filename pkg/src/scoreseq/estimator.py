"""scikit-learn compatible wrappers.

Each sample is one score set; the transformed value is the reconstructed
exponent tuple (or ``None`` when no tournament has that score set). The
estimators are stateless, so ``fit`` only validates parameters.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .errors import InputError
from .fastsearch import DEFAULT_NODE_BUDGET, reconstruct_fast
from .net import DEFAULT_MAX_STATES, enumerate_all, reconstruct_one
from .oracle import brute_force_all
from .validation import check_score_sets

ALGORITHMS = ("dp", "fast", "oracle")


class ScoreSequenceReconstructor(TransformerMixin, BaseEstimator):
    """Map score sets to one valid exponent set each.

    Parameters
    ----------
    algorithm : {"dp", "fast", "oracle"}
        Dynamic-programming net, residue-pruned search, or brute force.
    node_budget : int
        Node cap for ``"fast"``.
    max_states : int
        State cap for ``"dp"``.
    """

    def __init__(self, algorithm="dp", node_budget=DEFAULT_NODE_BUDGET, max_states=DEFAULT_MAX_STATES):
        self.algorithm = algorithm
        self.node_budget = node_budget
        self.max_states = max_states

    def fit(self, X, y=None):
        if self.algorithm not in ALGORITHMS:
            raise InputError(f"algorithm must be one of {ALGORITHMS}, got {self.algorithm!r}")
        self.n_samples_seen_ = len(check_score_sets(X))
        return self

    def _one(self, d):
        if self.algorithm == "fast":
            return reconstruct_fast(d, node_budget=self.node_budget)
        if self.algorithm == "oracle":
            sols = brute_force_all(d).solutions
            return sols[0] if sols else None
        return reconstruct_one(d, max_states=self.max_states)

    def transform(self, X):
        check_is_fitted(self, "n_samples_seen_")
        out = []
        for d in check_score_sets(X):
            e = self._one(d)
            out.append(None if e is None else e.exponents)
        return out

    def predict(self, X):
        return self.transform(X)

    def score(self, X, y=None):
        """Fraction of score sets for which an exponent set was found."""
        res = self.transform(X)
        return sum(e is not None for e in res) / len(res) if res else 1.0


class ScoreSequenceEnumerator(TransformerMixin, BaseEstimator):
    """Map score sets to the list of all their exponent sets."""

    def __init__(self, limit=None, max_states=DEFAULT_MAX_STATES):
        self.limit = limit
        self.max_states = max_states

    def fit(self, X, y=None):
        if self.limit is not None and self.limit < 0:
            raise InputError("limit must be nonnegative")
        self.n_samples_seen_ = len(check_score_sets(X))
        return self

    def transform(self, X):
        check_is_fitted(self, "n_samples_seen_")
        return [
            [e.exponents for e in enumerate_all(d, limit=self.limit, max_states=self.max_states)]
            for d in check_score_sets(X)
        ]
