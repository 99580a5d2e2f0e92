"""
Prime Generation - simple and segmented sieves, wheel residues, primality

The sieves work on numpy boolean arrays; the primality test is a fixed
strong-probable-prime witness set below 2^64 and BPSW above it.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import gmpy2
import numpy as np

from config.settings import SEGMENT_SIZE
from core.arith import isqrt
from core.errors import BoundError, DomainError


logger = logging.getLogger(__name__)

# Strong-probable-prime bases that are jointly correct for every n < 2^64
DETERMINISTIC_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DETERMINISTIC_LIMIT = 2 ** 64


@dataclass(frozen=True, eq=False)
class PrimeList:
    """Exactly the primes <= bound, ascending."""
    primes: np.ndarray
    bound: int

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return (int(p) for p in self.primes)

    def as_list(self) -> list[int]:
        return [int(p) for p in self.primes]


@dataclass(frozen=True, eq=False)
class WheelPartition:
    """Residues in [1, modulus] coprime to modulus, ascending."""
    modulus: int
    residues: np.ndarray

    @property
    def count(self) -> int:
        return len(self.residues)

    def mask(self) -> np.ndarray:
        """Boolean array of length modulus: True at residues coprime to modulus."""
        flags = np.zeros(self.modulus, dtype=bool)
        flags[self.residues % self.modulus] = True
        return flags


def sieve_primes(bound: int) -> PrimeList:
    """Sieve of Eratosthenes over the odd numbers up to bound."""
    if bound < 2:
        return PrimeList(np.empty(0, dtype=np.int64), bound)

    # index i stands for 2i + 1
    odd = np.ones(bound // 2 + 1, dtype=bool)
    odd[0] = False
    for i in range(1, (isqrt(bound) - 1) // 2 + 1):
        if odd[i]:
            p = 2 * i + 1
            odd[p * p // 2::p] = False

    primes = 2 * np.nonzero(odd)[0].astype(np.int64) + 1
    primes = np.concatenate((np.array([2], dtype=np.int64), primes[primes <= bound]))
    return PrimeList(primes, bound)


@lru_cache(maxsize=8)
def cached_base_primes(bound: int) -> PrimeList:
    """sieve_primes, memoised for the handful of base bounds a run uses."""
    return sieve_primes(bound)


def sieve_block(lo: int, hi: int, base: PrimeList, candidates: np.ndarray | None = None) -> np.ndarray:
    """
    Primes in the half-open block [lo, hi) as an int64 array.

    `candidates`, if given, is a boolean pre-filter of length hi - lo (for
    example a tiled wheel mask); entries already False are never revisited.
    The caller guarantees base.bound**2 >= hi - 1.
    """
    size = hi - lo
    if size <= 0:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(size, dtype=bool) if candidates is None else candidates.copy()
    if lo < 2:
        flags[: 2 - lo] = False

    for p in base.primes:
        p = int(p)
        sq = p * p
        if sq >= hi:
            break
        start = max(sq, (lo + p - 1) // p * p)
        flags[start - lo::p] = False

    return np.nonzero(flags)[0].astype(np.int64) + lo


def segmented_primes(lo: int, hi: int, base: PrimeList, segment_size: int = SEGMENT_SIZE) -> PrimeList:
    """Exactly the primes in [lo, hi], sieved segment by segment with `base`."""
    if lo > hi:
        raise DomainError(f"segmented_primes needs lo <= hi, got [{lo}, {hi}]")
    if base.bound * base.bound < hi:
        raise BoundError(
            f"Base primes up to {base.bound} cannot sieve up to {hi}; "
            f"need a base bound of at least {isqrt(hi - 1) + 1}"
        )

    chunks = []
    start = max(lo, 2)
    while start <= hi:
        stop = min(start + segment_size, hi + 1)
        chunks.append(sieve_block(start, stop, base))
        start = stop

    primes = np.concatenate(chunks) if chunks else np.empty(0, dtype=np.int64)
    return PrimeList(primes, hi)


def is_prime(n: int) -> bool:
    """
    Deterministic for n < 2^64 (fixed witness set); BPSW above, which has
    no known counterexample but is not a proof.
    """
    if n < 2:
        return False
    for p in DETERMINISTIC_WITNESSES:
        if n % p == 0:
            return n == p
    if n < DETERMINISTIC_LIMIT:
        return all(gmpy2.is_strong_prp(n, a) for a in DETERMINISTIC_WITNESSES)
    return bool(gmpy2.is_bpsw_prp(n))


def primality_label(n: int) -> str:
    """'prime' when is_prime is a proof for n, else 'probable prime'."""
    return "prime" if n < DETERMINISTIC_LIMIT else "probable prime"


@lru_cache(maxsize=4)
def wheel_residues(modulus: int) -> WheelPartition:
    """Residues r in [1, modulus] with gcd(r, modulus) = 1."""
    if modulus < 2:
        raise DomainError(f"wheel modulus must be at least 2, got {modulus}")
    values = np.arange(1, modulus + 1, dtype=np.int64)
    residues = values[np.gcd(values, modulus) == 1]
    return WheelPartition(modulus, residues)
