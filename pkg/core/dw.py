"""
Genus 1 - Serre primes and Deuring-Waterhouse numbers

q = p^e (e odd) is a Deuring-Waterhouse number when p divides
m = floor(2*sqrt(q)): then no elliptic curve over F_q reaches q + m + 1
points. A Serre prime is the e = 5 case.

Range searches split the number line into blocks of whole wheel turns
(mod 510510). Each block is an independent work unit and the checkpoint
records finished block indices.
"""

import logging
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from itertools import islice
from typing import Callable, Optional

import gmpy2
import numpy as np
from tqdm import tqdm

from config.settings import SEGMENT_SIZE, WHEEL_MODULUS, WHEEL_PRIMES
from core.arith import hasse_m, iroot, isqrt
from core.errors import CheckpointError, DomainError
from core.models import DWRecord, PrimePower, SearchCheckpoint
from core.primes import (
    cached_base_primes,
    is_prime,
    primality_label,
    sieve_block,
    wheel_residues,
)


logger = logging.getLogger(__name__)


# ==================== PREDICATES ====================

def _divides_m(p: int, e: int) -> bool:
    """p | isqrt(4 p^e), without any argument checks."""
    return gmpy2.isqrt(gmpy2.mpz(p) ** e << 2) % p == 0


def divides_hasse_m(p: int, e: int) -> bool:
    """
    Raw criterion p | floor(2*sqrt(p^e)), whatever the parity of e.

    It fires for (2, 1) and (3, 1), which are not DW numbers: over a prime
    field every trace in [-m, m] occurs.
    """
    if e < 1:
        raise DomainError(f"exponent must be at least 1, got {e}")
    return _divides_m(p, e)


def is_dw(p: int, e: int) -> bool:
    """True iff e is odd (e >= 3) and p divides hasse_m(p^e)."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if e < 1:
        raise DomainError(f"exponent must be at least 1, got {e}")
    if e % 2 == 0 or e == 1:
        return False
    return _divides_m(p, e)


def is_serre_prime(p: int) -> bool:
    """p^5 is a Deuring-Waterhouse number."""
    return is_dw(p, 5)


# ==================== RANGE SEARCH ====================

def block_length(segment_size: int = SEGMENT_SIZE) -> int:
    """segment_size rounded up to a whole number of wheel turns."""
    turns = max(1, -(-segment_size // WHEEL_MODULUS))
    return turns * WHEEL_MODULUS


def segment_indices(lo: int, hi: int, length: int) -> range:
    """Block indices covering the open interval (lo, hi)."""
    return range((lo + 1) // length, (hi - 1) // length + 1)


def _scan_block(index: int, length: int, lo: int, hi: int, exponent: int, base_bound: int) -> list[int]:
    """DW bases p with lo < p < hi inside block `index`."""
    block_lo = index * length
    a = max(block_lo, lo + 1)
    b = min(block_lo + length, hi)
    if a >= b:
        return []

    mask = np.tile(wheel_residues(WHEEL_MODULUS).mask(), length // WHEEL_MODULUS)
    candidates = mask[a - block_lo:b - block_lo]
    survivors = sieve_block(a, b, cached_base_primes(base_bound), candidates).tolist()
    survivors = [p for p in WHEEL_PRIMES if a <= p < b] + survivors

    hits = []
    for p in survivors:
        if _divides_m(p, exponent) and is_prime(p):
            if primality_label(p) != "prime":
                logger.info("hit %d^%d has a probable-prime base", p, exponent)
            hits.append(p)
    return hits


def _check_checkpoint(checkpoint: SearchCheckpoint, lo: int, hi: int, e: int, length: int, indices: range):
    """Raise CheckpointError unless `checkpoint` is a consistent state of this search."""
    if not checkpoint.matches(lo, hi, e, length):
        raise CheckpointError(
            f"Checkpoint is for ({checkpoint.range_lo}, {checkpoint.range_hi}) e={checkpoint.exponent} "
            f"segment_size={checkpoint.segment_size}, not ({lo}, {hi}) e={e} segment_size={length}"
        )
    # `in` on a range is arithmetic; the index set is never built
    if not all(k in indices for k in checkpoint.completed_segments):
        raise CheckpointError("Checkpoint lists segments outside the search range")

    for pp in checkpoint.hits:
        if pp.e != e or not lo < pp.p < hi:
            raise CheckpointError(f"Checkpoint hit {pp.label} is outside the search ({lo}, {hi}) e={e}")
        if pp.p // length not in checkpoint.completed_segments:
            raise CheckpointError(f"Checkpoint hit {pp.label} lies in a segment not marked complete")
        if not is_prime(pp.p) or not _divides_m(pp.p, e):
            raise CheckpointError(f"Checkpoint hit {pp.label} is not a Deuring-Waterhouse number")


def search_serre_range(
    lo: int,
    hi: int,
    e: int,
    parallelism: int = 1,
    checkpoint: Optional[SearchCheckpoint] = None,
    on_segment: Optional[Callable[[SearchCheckpoint], None]] = None,
    segment_size: int = SEGMENT_SIZE,
    progress: bool = False,
) -> list[PrimePower]:
    """
    All primes p with lo < p < hi and is_dw(p, e), ascending.

    `checkpoint` (if given) is updated in place after every finished block
    and handed to `on_segment`, so the caller can persist it; blocks it
    already lists are not rescanned. The result does not depend on
    `parallelism`.

    Pending blocks are generated lazily and at most 2 * parallelism are in
    flight, so memory does not grow with the width of the range. If
    `on_segment` raises, queued blocks are cancelled.
    """
    if e % 2 == 0 or e < 5:
        raise DomainError(f"search exponent must be odd and at least 5, got {e}")
    if lo >= hi:
        raise DomainError(f"search range needs lo < hi, got ({lo}, {hi})")

    length = block_length(segment_size)
    indices = segment_indices(lo, hi, length)
    if checkpoint is None:
        checkpoint = SearchCheckpoint(lo, hi, e, length)
    else:
        _check_checkpoint(checkpoint, lo, hi, e, length, indices)

    completed = checkpoint.completed_segments
    remaining = len(indices) - len(completed)
    pending = (k for k in indices if k not in completed)
    base_bound = isqrt(hi - 1) + 1
    logger.info(
        "searching (%d, %d) e=%d: %d segments, %d pending, %d workers",
        lo, hi, e, len(indices), remaining, parallelism,
    )

    bar = tqdm(total=remaining, desc=f"e={e}", unit="seg", disable=not progress)

    def finish(index: int, found: list[int]):
        checkpoint.hits.extend(PrimePower(p, e) for p in found)
        completed.add(index)
        if on_segment is not None:
            on_segment(checkpoint)
        bar.update(1)

    try:
        if parallelism == 1:
            for k in pending:
                finish(k, _scan_block(k, length, lo, hi, e, base_bound))
        else:
            with ProcessPoolExecutor(max_workers=parallelism) as pool:
                in_flight = {}

                def submit(k: int):
                    in_flight[pool.submit(_scan_block, k, length, lo, hi, e, base_bound)] = k

                try:
                    for k in islice(pending, 2 * parallelism):
                        submit(k)
                    while in_flight:
                        done, _ = wait(in_flight, return_when=FIRST_COMPLETED)
                        for future in done:
                            finish(in_flight.pop(future), future.result())
                            k = next(pending, None)
                            if k is not None:
                                submit(k)
                except BaseException:
                    pool.shutdown(wait=False, cancel_futures=True)
                    raise
    finally:
        bar.close()

    unique = {pp.p: pp for pp in checkpoint.hits}
    return [unique[p] for p in sorted(unique)]


# ==================== ENUMERATION ====================

def build_record(pp: PrimePower) -> DWRecord:
    """Attach m and the genus 2 / genus 3 classification to a DW number."""
    from core.classify import genus2_defect, genus3_mrd

    return DWRecord(pp=pp, m=hasse_m(pp.q), genus2=genus2_defect(pp), genus3=genus3_mrd(pp))


def enumerate_dw(bound: int, parallelism: int = 1, progress: bool = False) -> list[DWRecord]:
    """All DW numbers q < bound, ascending by q."""
    if bound < 2:
        raise DomainError(f"bound must be at least 2, got {bound}")

    found: list[PrimePower] = []
    for e in range(5, (bound - 1).bit_length(), 2):
        p_max = iroot(bound - 1, e)
        if p_max < 2:
            break
        hits = search_serre_range(1, p_max + 1, e, parallelism=parallelism, progress=progress)
        logger.debug("e=%d: %d bases up to %d", e, len(hits), p_max)
        found.extend(hits)

    found.sort(key=lambda pp: pp.q)
    return [build_record(pp) for pp in found]


# ==================== DIGIT PREDICTOR ====================

def _base_digits(n: int, base: int) -> list[int]:
    """Digits of n in `base`, least significant first."""
    if base <= 62:
        text = gmpy2.digits(n, base)
        return [0 if ch == "0" else 1 for ch in reversed(text)]
    digits = []
    while n:
        n, r = divmod(n, base)
        digits.append(r)
    return digits


def dw_exponents_by_digits(p: int, e_max: int) -> list[int]:
    """
    Odd exponents 3 <= e <= e_max with p^e a DW number, read off the base-p
    expansion of 2*sqrt(p).

    For e = 2k + 1, floor(2 sqrt(p^e)) = floor(2 sqrt(p) * p^k), whose last
    base-p digit is the k-th fractional digit of 2 sqrt(p); p divides it
    exactly when that digit is 0. One truncated expansion to K = (e_max-1)/2
    fractional digits answers every exponent at once. Only zero/non-zero
    digits matter, so bases up to 62 keep just that bit.
    """
    if e_max < 3:
        return []
    k_max = (e_max - 1) // 2
    expansion = isqrt(4 * p ** (2 * k_max + 1))
    digits = _base_digits(expansion, p)
    return [2 * k + 1 for k in range(1, k_max + 1) if digits[k_max - k] == 0]
