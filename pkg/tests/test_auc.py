"""Mann-Whitney AUC equals the trapezoid ROC area; tie and error handling."""

import random

import pytest

from oxequity.stats.auc import auc_mann_whitney, hanley_mcneil_se

from oracles import trapezoid_roc_auc


def test_perfect_separation():
    assert auc_mann_whitney([1, 2, 3, 10, 11], [0, 0, 0, 1, 1]) == 1.0


def test_all_ties():
    assert auc_mann_whitney([5.0] * 8, [0, 1, 0, 1, 1, 0, 0, 1]) == 0.5


def test_enumerated_pairs():
    # positives score {3, 2}; negatives {1, 4}; concordant pairs: 2 of 4
    assert auc_mann_whitney([1, 3, 2, 4], [0, 1, 1, 0]) == 0.5


def test_reversed_scores_complement():
    scores = [0.1, 0.9, 0.4, 0.7, 0.2]
    labels = [0, 1, 0, 1, 1]
    auc = auc_mann_whitney(scores, labels)
    flipped = auc_mann_whitney([-s for s in scores], labels)
    assert auc + flipped == pytest.approx(1.0, abs=1e-12)


def test_matches_trapezoid_roc_on_random_instances():
    rng = random.Random(20260810)
    for _ in range(100):
        n = rng.randint(4, 25)
        labels = [rng.randint(0, 1) for _ in range(n)]
        if sum(labels) in (0, n):
            labels[0] = 1 - labels[0]
        # coarse scores so ties occur often
        scores = [rng.randint(0, 6) / 2.0 for _ in range(n)]
        assert auc_mann_whitney(scores, labels) == pytest.approx(
            trapezoid_roc_auc(scores, labels), abs=1e-12
        )


def test_single_class_rejected():
    with pytest.raises(ValueError):
        auc_mann_whitney([1, 2, 3], [1, 1, 1])
    with pytest.raises(ValueError):
        auc_mann_whitney([1, 2, 3], [0, 0, 0])


def test_label_validation():
    with pytest.raises(ValueError):
        auc_mann_whitney([1, 2], [0, 2])
    with pytest.raises(ValueError):
        auc_mann_whitney([1, 2, 3], [0, 1])


def test_hanley_mcneil_se_behaviour():
    # shrinks with sample size, zero at a perfect area
    small = hanley_mcneil_se(0.8, 20, 40)
    large = hanley_mcneil_se(0.8, 200, 400)
    assert large < small
    assert hanley_mcneil_se(1.0, 50, 50) == 0.0
    with pytest.raises(ValueError):
        hanley_mcneil_se(0.7, 0, 10)
