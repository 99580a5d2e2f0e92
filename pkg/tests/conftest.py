"""Shared fixtures and brute-force oracles for the test suite."""

import math

import pytest

from config.settings import FIXTURE_PATH
from core.models import CountConvention, PolyFamily
from core.primes import is_prime
from importers.fixture_importer import load_fixture


@pytest.fixture(scope="session")
def fixture_entries():
    """The published list, as PrimePower entries in file order."""
    return load_fixture(FIXTURE_PATH)


def brute_force_count(family: PolyFamily, bound: int) -> int:
    """Prime values of `family` counted x by x, independently of the sieve."""
    count = 0
    if family.convention is CountConvention.INDEX:
        for x in range(1, math.isqrt(bound) + 1):
            if is_prime(family.evaluate(x)):
                count += 1
        return count

    x = 1
    while family.evaluate(x) <= bound:
        if is_prime(family.evaluate(x)):
            count += 1
        x += 1
    return count


def small_primes(limit: int) -> list[int]:
    """Primes up to limit by trial division."""
    return [n for n in range(2, limit + 1) if all(n % d for d in range(2, math.isqrt(n) + 1))]
