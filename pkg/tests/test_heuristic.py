"""The log log heuristic, prime reciprocal sums and the exponent-range experiment."""

import math

import pytest

from core.errors import DomainError
from core.heuristic import (
    GOLDEN,
    TAU,
    expected_split,
    exponent_range_experiment,
    heuristic_estimate,
    loglog_estimate,
    reciprocal_prime_sum,
)


def test_loglog_estimate():
    assert loglog_estimate(10 ** 7, 10 ** 16) == pytest.approx(0.826679, abs=1e-6)
    assert loglog_estimate(10 ** 2, 10 ** 6) == pytest.approx(math.log(3))
    with pytest.raises(DomainError):
        loglog_estimate(2, 100)
    with pytest.raises(DomainError):
        loglog_estimate(100, 100)


def test_loglog_estimate_is_additive():
    bounds = [10 ** 2, 10 ** 3, 10 ** 7, 12345678901, 10 ** 16, 10 ** 40]
    for a, b, c in zip(bounds, bounds[1:], bounds[2:]):
        split = loglog_estimate(a, b) + loglog_estimate(b, c)
        assert split == pytest.approx(loglog_estimate(a, c), rel=1e-12)


def test_reciprocal_prime_sum_small_ranges():
    assert reciprocal_prime_sum(1, 10) == pytest.approx(1 / 2 + 1 / 3 + 1 / 5 + 1 / 7)
    assert reciprocal_prime_sum(1, 10) == pytest.approx(1.17619, abs=1e-5)
    # endpoints are excluded
    assert reciprocal_prime_sum(2, 7) == pytest.approx(1 / 3 + 1 / 5)
    assert reciprocal_prime_sum(5, 5) == 0.0
    assert reciprocal_prime_sum(5, 6) == 0.0


def test_reciprocal_prime_sum_is_additive():
    whole = reciprocal_prime_sum(1, 10 ** 5)
    parts = reciprocal_prime_sum(1, 50000) + reciprocal_prime_sum(49999, 10 ** 5)
    assert whole == pytest.approx(parts, rel=1e-12)


def test_reciprocal_prime_sum_tracks_loglog():
    assert abs(reciprocal_prime_sum(10 ** 2, 10 ** 6) - math.log(3)) < 0.15


def test_reciprocal_prime_sum_rejects_bad_ranges():
    with pytest.raises(DomainError):
        reciprocal_prime_sum(1, 10 ** 11)
    with pytest.raises(DomainError):
        reciprocal_prime_sum(10, 5)


def test_expected_split():
    above, below = expected_split(146, GOLDEN)
    assert round(above, 1) == 55.8
    assert round(below, 1) == 90.2
    above, _ = expected_split(146, TAU)
    assert round(above, 1) == 28.9
    with pytest.raises(DomainError):
        expected_split(146, 1.5)


@pytest.mark.parametrize("threshold", [GOLDEN, TAU, 0.001, 0.5, 0.999])
@pytest.mark.parametrize("n", [0, 1, 146, 10 ** 6])
def test_expected_split_conserves_total(n, threshold):
    above, below = expected_split(n, threshold)
    assert above >= 0 and below >= 0
    assert above + below == pytest.approx(n)


def test_thresholds():
    assert GOLDEN == pytest.approx(0.6180339887)
    assert TAU == pytest.approx(0.8019377358)


def test_heuristic_estimate():
    estimate = heuristic_estimate(10 ** 7, 10 ** 16)
    assert estimate.reciprocal_sum is None
    assert estimate.loglog_value == pytest.approx(0.826679, abs=1e-6)

    exact = heuristic_estimate(10, 10 ** 4, exact_sum=True)
    assert exact.reciprocal_sum == pytest.approx(reciprocal_prime_sum(10, 10 ** 4))


def test_small_experiment_counts_agree():
    result = exponent_range_experiment(10 ** 2, 10 ** 6, 9, 11)
    assert result.direct_count == result.digit_count == 3
    assert result.exponent_count == 1
    assert result.expected == pytest.approx(math.log(3))


def test_experiment_rejects_small_exponents():
    with pytest.raises(DomainError):
        exponent_range_experiment(10 ** 2, 10 ** 4, 3, 9)
    with pytest.raises(DomainError):
        exponent_range_experiment(10 ** 2, 10 ** 4, 9, 9)


@pytest.mark.slow
def test_full_experiment():
    result = exponent_range_experiment(10 ** 2, 10 ** 6, 7, 107, parallelism=4)
    assert result.direct_count == result.digit_count == 56
    assert result.exponent_count == 50
    assert result.relative_gap < 0.5
