import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from scoreseq.core import ScoreSet
from scoreseq.datasets import ENUMERATION_EXPONENTS
from scoreseq.errors import InputError
from scoreseq.estimator import ScoreSequenceEnumerator, ScoreSequenceReconstructor
from scoreseq.validation import check_exponent_set, check_score_sets

X = [(0, 1, 3, 5), "2,4,7,14", ScoreSet([0])]


@pytest.mark.parametrize("algorithm", ["dp", "fast", "oracle"])
def test_fit_transform(algorithm):
    est = ScoreSequenceReconstructor(algorithm=algorithm)
    out = est.fit_transform(X)
    assert out[0] == (1, 1, 3, 1)
    assert out[1] in ENUMERATION_EXPONENTS
    assert out[2] == (1,)
    assert est.predict(X) == out
    assert est.score(X) == 1.0


def test_params_and_clone():
    est = ScoreSequenceReconstructor(algorithm="fast", node_budget=10)
    assert est.get_params() == {"algorithm": "fast", "node_budget": 10, "max_states": 2_000_000}
    c = clone(est).set_params(algorithm="dp")
    assert c.algorithm == "dp" and est.algorithm == "fast"


def test_not_fitted():
    with pytest.raises(NotFittedError):
        ScoreSequenceReconstructor().transform(X)


def test_bad_algorithm():
    with pytest.raises(InputError):
        ScoreSequenceReconstructor(algorithm="magic").fit(X)


def test_enumerator():
    out = ScoreSequenceEnumerator().fit_transform([(2, 4, 7, 14), (0, 1, 3, 5)])
    assert set(out[0]) == ENUMERATION_EXPONENTS
    assert out[1] == [(1, 1, 3, 1)]
    assert len(ScoreSequenceEnumerator(limit=3).fit_transform([(2, 4, 7, 14)])[0]) == 3


def test_validation_helpers():
    assert check_score_sets([[0, 2], "1,3"]) == [ScoreSet([0, 2]), ScoreSet([1, 3])]
    with pytest.raises(InputError):
        check_score_sets([0, 1, 2])
    with pytest.raises(InputError):
        check_score_sets("0,1")
    with pytest.raises(InputError):
        check_exponent_set([1, 1], [0])
    assert check_exponent_set([1], [0]).exponents == (1,)
