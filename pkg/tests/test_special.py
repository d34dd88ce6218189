"""Special-function accuracy against independent oracles."""

import math

import pytest

from oxequity.stats.special import (
    normal_cdf,
    normal_quantile,
    regularized_beta,
    regularized_gamma_p,
    regularized_gamma_q,
    sigmoid,
)

from oracles import normal_cdf_oracle, normal_quantile_oracle

# frozen from the bisection-on-erf-series oracle
Q_975 = 1.9599639845400542


def test_quantile_at_half_is_zero():
    assert abs(normal_quantile(0.5)) < 1e-12


def test_quantile_975_matches_oracle():
    assert normal_quantile_oracle(0.975) == pytest.approx(Q_975, abs=1e-12)
    assert normal_quantile(0.975) == pytest.approx(Q_975, abs=1e-9)


@pytest.mark.parametrize("p", [i / 100 for i in range(1, 100)])
def test_cdf_quantile_inverse_pair(p):
    assert normal_cdf(normal_quantile(p)) == pytest.approx(p, abs=1e-12)


def test_quantile_is_inverse_in_x():
    for x in [-3.0 + 0.25 * i for i in range(25)]:
        assert normal_quantile(normal_cdf(x)) == pytest.approx(x, abs=1e-8)


def test_cdf_absolute_accuracy():
    for x in [-8.0 + 0.5 * i for i in range(33)]:
        assert normal_cdf(x) == pytest.approx(normal_cdf_oracle(x), abs=1e-10)


@pytest.mark.parametrize("p", [0.0, 1.0, -0.2, 1.5])
def test_quantile_rejects_out_of_domain(p):
    with pytest.raises(ValueError):
        normal_quantile(p)


def test_quantile_extreme_tails_monotone():
    values = [normal_quantile(p) for p in (1e-12, 1e-8, 1e-4, 0.5, 1 - 1e-4, 1 - 1e-8)]
    assert values == sorted(values)
    assert normal_quantile(1e-12) == pytest.approx(-7.034484, abs=1e-4)


def test_gamma_p_q_complement():
    for a in (0.5, 1.0, 2.5, 10.0, 60.0):
        for x in (0.1, 1.0, 5.0, 30.0, 120.0):
            assert regularized_gamma_p(a, x) + regularized_gamma_q(a, x) == pytest.approx(
                1.0, abs=1e-13
            )


def test_gamma_against_mpmath():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 30
    for a in (0.5, 1.0, 3.0, 12.0, 50.0):
        for x in (0.05, 0.8, 4.0, 20.0, 80.0):
            expected = float(mp.gammainc(a, 0, x, regularized=True))
            assert regularized_gamma_p(a, x) == pytest.approx(expected, rel=1e-11, abs=1e-300)


def test_beta_against_mpmath():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 30
    for a, b in ((0.5, 0.5), (2.0, 3.0), (10.0, 0.5), (25.0, 25.0)):
        for x in (0.01, 0.2, 0.5, 0.9, 0.999):
            expected = float(mp.betainc(a, b, 0, x, regularized=True))
            assert regularized_beta(x, a, b) == pytest.approx(expected, rel=1e-10, abs=1e-300)


def test_beta_edge_values():
    assert regularized_beta(0.0, 2.0, 3.0) == 0.0
    assert regularized_beta(1.0, 2.0, 3.0) == 1.0
    with pytest.raises(ValueError):
        regularized_beta(0.5, -1.0, 2.0)


def test_gamma_rejects_bad_arguments():
    with pytest.raises(ValueError):
        regularized_gamma_p(0.0, 1.0)
    with pytest.raises(ValueError):
        regularized_gamma_q(1.0, -0.5)


def test_sigmoid_stability_and_symmetry():
    assert sigmoid(0.0) == 0.5
    assert sigmoid(800.0) == 1.0
    assert sigmoid(-800.0) == pytest.approx(0.0, abs=1e-300)
    for x in (-5.0, -1.3, 0.7, 4.2):
        assert sigmoid(x) + sigmoid(-x) == pytest.approx(1.0, abs=1e-15)


def test_sigmoid_matches_closed_form():
    assert sigmoid(1.6) == pytest.approx(0.832018385134, abs=1e-10)
    assert sigmoid(0.85) == pytest.approx(0.700567142474, abs=1e-10)
    assert sigmoid(-3.0) == pytest.approx(1.0 / (1.0 + math.exp(3.0)), abs=1e-15)
