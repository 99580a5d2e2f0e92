"""
Heuristic Estimates - how many DW numbers to expect, and on which side

If the last base-p digit of floor(2 sqrt(p^e)) is uniform, p | m with
probability 1/p, so the expected number of hits over y < p < x is about
sum 1/p ~ log log x - log log y. The splits assume {2 sqrt q} uniform
in [0, 1).
"""

import logging
import math

import numpy as np
from tqdm import tqdm

from config.settings import RECIPROCAL_SUM_LIMIT, SEGMENT_SIZE
from core.arith import isqrt
from core.dw import dw_exponents_by_digits, search_serre_range
from core.errors import DomainError
from core.models import ExperimentResult, HeuristicEstimate
from core.primes import sieve_block, sieve_primes


logger = logging.getLogger(__name__)

GOLDEN = (math.sqrt(5) - 1) / 2
TAU = 1 - 4 * math.cos(3 * math.pi / 7) ** 2

THRESHOLDS = {
    "golden": GOLDEN,
    "tau": TAU,
}


def loglog_estimate(lo: int, hi: int) -> float:
    """log log(hi) - log log(lo), natural logarithms."""
    if not math.e < lo < hi:
        raise DomainError(f"loglog_estimate needs e < lo < hi, got ({lo}, {hi})")
    return math.log(math.log(hi)) - math.log(math.log(lo))


def reciprocal_prime_sum(lo: int, hi: int, progress: bool = False) -> float:
    """
    Sum of 1/p over primes lo < p < hi.

    Each segment is summed by numpy and the per-segment totals are added
    with math.fsum, so the result does not depend on how the segments
    are visited.
    """
    if hi > RECIPROCAL_SUM_LIMIT:
        raise DomainError(
            f"exact sums stop at {RECIPROCAL_SUM_LIMIT}; use loglog_estimate for ({lo}, {hi})"
        )
    if lo > hi:
        raise DomainError(f"reciprocal_prime_sum needs lo <= hi, got ({lo}, {hi})")

    start = max(lo + 1, 2)
    if start >= hi:
        return 0.0

    base = sieve_primes(isqrt(hi - 1) + 1)
    starts = range(start, hi, SEGMENT_SIZE)
    totals = []
    for a in tqdm(starts, desc="1/p", unit="seg", disable=not progress):
        primes = sieve_block(a, min(a + SEGMENT_SIZE, hi), base)
        totals.append(float(np.sum(1.0 / primes.astype(np.float64))))
    return math.fsum(totals)


def expected_split(n: int, threshold: float) -> tuple[float, float]:
    """(above, below) for n uniform fractional parts against `threshold`."""
    if n < 0:
        raise DomainError(f"count must be non-negative, got {n}")
    if not 0 < threshold < 1:
        raise DomainError(f"threshold must lie in (0, 1), got {threshold}")
    return n * (1 - threshold), n * threshold


def heuristic_estimate(lo: int, hi: int, exact_sum: bool = False, progress: bool = False) -> HeuristicEstimate:
    """The log log estimate over (lo, hi), with the exact reciprocal sum if asked."""
    estimate = HeuristicEstimate(lo, hi, loglog_estimate(lo, hi))
    if exact_sum:
        estimate.reciprocal_sum = reciprocal_prime_sum(lo, hi, progress=progress)
    return estimate


def exponent_range_experiment(p_lo: int, p_hi: int, e_lo: int, e_hi: int, parallelism: int = 1) -> ExperimentResult:
    """
    DW pairs (p, e) with p_lo < p < p_hi prime and e odd in [e_lo, e_hi).

    Counted once by the range search for every exponent and once by the
    digit predictor for every prime; the expectation is the number of
    exponents times the log log estimate.
    """
    if e_lo < 5:
        raise DomainError(f"experiment exponents start at 5, got {e_lo}")
    if e_hi <= e_lo:
        raise DomainError(f"empty exponent range [{e_lo}, {e_hi})")

    exponents = [e for e in range(e_lo, e_hi) if e % 2 == 1]

    direct = 0
    for e in exponents:
        hits = search_serre_range(p_lo, p_hi, e, parallelism=parallelism)
        logger.debug("e=%d: %d hits", e, len(hits))
        direct += len(hits)

    digit = 0
    for p in sieve_primes(p_hi - 1):
        if p <= p_lo:
            continue
        digit += sum(1 for e in dw_exponents_by_digits(p, e_hi - 1) if e >= e_lo)

    if direct != digit:
        logger.warning("range search found %d pairs, digit predictor %d", direct, digit)

    return ExperimentResult(
        p_lo=p_lo,
        p_hi=p_hi,
        e_lo=e_lo,
        e_hi=e_hi,
        direct_count=direct,
        digit_count=digit,
        expected=len(exponents) * loglog_estimate(p_lo, p_hi),
    )
