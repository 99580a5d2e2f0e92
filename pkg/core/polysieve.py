"""
Polynomial Prime Counts - primes of the form x^2+c and x^2+x+c

The count works in three passes:
  1. base primes up to B^(1/4)
  2. primes up to B^(1/2) at which the polynomial has roots, with the roots
  3. a boolean sieve over x in blocks, striking x = r (mod p) for each root

x values whose polynomial value is itself below the stage 2 limit are
tested directly, so a prime value is never struck by its own root.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, TextIO

import numpy as np

from config.settings import PUBLISHED_TABLE_1, PUBLISHED_TABLE_2, TABLE_1_ERRATA, X_BLOCK_SIZE
from core.arith import iroot, isqrt, legendre, solve_quadratic_rep, sqrt_mod_prime
from core.errors import DomainError
from core.models import CountConvention, CountRow, PolyFamily
from core.primes import is_prime, segmented_primes, sieve_primes


logger = logging.getLogger(__name__)

# Column order of the two published tables
TABLE_FAMILIES = {
    1: (PolyFamily.X2PXP1, PolyFamily.X2P1),
    2: (PolyFamily.X2P2, PolyFamily.X2PXP3),
}
PUBLISHED_TABLES = {1: PUBLISHED_TABLE_1, 2: PUBLISHED_TABLE_2}


# ==================== ROOTS MOD p ====================

def poly_roots_mod_p(family: PolyFamily, p: int) -> list[int]:
    """
    All r in [0, p) with poly(r) = 0 (mod p), ascending.

    x^2+x+1 takes the cube roots of unity g^((p-1)/3) != 1; the other
    families go through a modular square root of the discriminant.
    """
    if p == 2:
        raise DomainError("p = 2 has no root table; parity is handled by the sieve")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")

    if family is PolyFamily.X2PXP1:
        if p == 3:
            return [1]
        if p % 3 != 1:
            return []
        g = 2
        while True:
            w = pow(g, (p - 1) // 3, p)
            if w != 1:
                return sorted((w, w * w % p))
            g += 1

    a, disc = family.linear, family.discriminant
    half = pow(2, -1, p)
    if disc % p == 0:
        return [(-a * half) % p]
    s = sqrt_mod_prime(disc, p)
    if s is None:
        return []
    return sorted({(-a + s) * half % p, (-a - s) * half % p})


def _parity_roots(family: PolyFamily) -> list[int]:
    """x mod 2 at which poly(x) is even."""
    return [r for r in (0, 1) if family.evaluate(r) % 2 == 0]


def _has_roots(family: PolyFamily, p: int) -> bool:
    """Stage 2 filter: the discriminant is 0 or a square mod p."""
    disc = family.discriminant
    return disc % p == 0 or legendre(disc, p) == 1


# ==================== X RANGE ====================

def _largest_x_at_most(family: PolyFamily, value: int) -> int:
    """Largest x >= 0 with poly(x) <= value, or -1 if there is none."""
    c = family.constant
    if value < c:
        return -1
    if family.linear == 0:
        return isqrt(value - c)
    return (isqrt(4 * (value - c) + 1) - 1) // 2


def x_limit(family: PolyFamily, bound: int) -> int:
    """Last x counted for a table row at `bound`, per the family's convention."""
    if family.convention is CountConvention.INDEX:
        return isqrt(bound)
    return _largest_x_at_most(family, bound)


def _check_sievable(family: PolyFamily, bound: int):
    if not family.sievable:
        raise DomainError(f"{family.label} is always even; there are no primes to count")
    if bound < 10:
        raise DomainError(f"bound must be at least 10, got {bound}")


# ==================== TRIPLE SIEVE ====================

def _root_table(family: PolyFamily, limit: int) -> list[tuple[int, tuple[int, ...]]]:
    """(p, roots) for every prime p <= limit at which the polynomial has roots."""
    base = sieve_primes(isqrt(limit) + 1)
    logger.debug("stage 1: %d base primes up to %d", len(base), base.bound)

    table = []
    parity = _parity_roots(family)
    if parity:
        table.append((2, tuple(parity)))
    if limit < 3:
        return table
    for p in segmented_primes(3, limit, base):
        if _has_roots(family, p):
            table.append((p, tuple(poly_roots_mod_p(family, p))))
    logger.debug("stage 2: %d primes with roots up to %d", len(table), limit)
    return table


def _sieve_x_block(x_lo: int, x_hi: int, table: list[tuple[int, tuple[int, ...]]]) -> np.ndarray:
    """Unstruck x in [x_lo, x_hi)."""
    flags = np.ones(x_hi - x_lo, dtype=bool)
    for p, roots in table:
        for r in roots:
            flags[(r - x_lo) % p::p] = False
    return np.nonzero(flags)[0].astype(np.int64) + x_lo


def prime_x_values(family: PolyFamily, bound: int, parallelism: int = 1) -> list[int]:
    """Ascending x >= 1 counted in the table row of `family` at `bound`."""
    _check_sievable(family, bound)

    x_max = x_limit(family, bound)
    if x_max < 1:
        return []
    limit = isqrt(family.evaluate(x_max))
    x_small = min(_largest_x_at_most(family, limit), x_max)

    found = [x for x in range(1, x_small + 1) if is_prime(family.evaluate(x))]

    x_start = max(x_small + 1, 1)
    if x_start > x_max:
        return found

    table = _root_table(family, limit)
    blocks = [
        (lo, min(lo + X_BLOCK_SIZE, x_max + 1))
        for lo in range(x_start, x_max + 1, X_BLOCK_SIZE)
    ]
    logger.info(
        "%s up to %d: x <= %d, %d blocks, %d workers",
        family.label, bound, x_max, len(blocks), parallelism,
    )

    if parallelism == 1 or len(blocks) == 1:
        survivors = [_sieve_x_block(lo, hi, table) for lo, hi in blocks]
    else:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            futures = [pool.submit(_sieve_x_block, lo, hi, table) for lo, hi in blocks]
            survivors = [future.result() for future in futures]

    for chunk in survivors:
        found.extend(int(x) for x in chunk)
    return found


def triple_sieve_count(family: PolyFamily, bound: int, parallelism: int = 1) -> CountRow:
    """Number of prime values of `family` in the table row at `bound`."""
    return CountRow(family, bound, len(prime_x_values(family, bound, parallelism)))


def emit_prime_x_values(family: PolyFamily, bound: int, sink: TextIO, parallelism: int = 1) -> int:
    """Write the counted x values to `sink`, one per line; returns how many."""
    xs = prime_x_values(family, bound, parallelism)
    for x in xs:
        sink.write(f"{x}\n")
    return len(xs)


# ==================== PRIME POWERS ====================

def poly_prime_powers(family: PolyFamily, bound: int) -> list[tuple[int, int, int]]:
    """
    (x, p, e) with e >= 2, poly(x) = p^e <= bound and x >= c, ascending by p^e.

    x >= c is the side condition of the genus 3 clauses; it drops
    2^2 + 2 + 3 = 9.
    """
    if family is PolyFamily.X2P1:
        # x^2 + 1 = y^k has no solutions with k >= 2
        return []

    found = []
    e = 2
    while 2 ** e <= bound:
        p_max = iroot(bound, e)
        for p in sieve_primes(p_max):
            x = solve_quadratic_rep(p ** e, family)
            if x is not None and x >= family.constant:
                found.append((x, p, e))
        e += 1

    found.sort(key=lambda item: item[1] ** item[2])
    return found


# ==================== TABLES ====================

def table_bounds(max_bound: int) -> list[int]:
    """10, 100, ... up to max_bound."""
    bounds = []
    b = 10
    while b <= max_bound:
        bounds.append(b)
        b *= 10
    return bounds


def table_rows(table: int, max_bound: int, parallelism: int = 1) -> list[CountRow]:
    """Both columns of a published table, bound by bound, in column order."""
    if table not in TABLE_FAMILIES:
        raise DomainError(f"table must be 1 or 2, got {table}")
    rows = []
    for bound in table_bounds(max_bound):
        for family in TABLE_FAMILIES[table]:
            rows.append(triple_sieve_count(family, bound, parallelism))
    return rows


def count_ratios(rows: list[CountRow]) -> list[tuple[int, Optional[float]]]:
    """(bound, count(x2+x+1) / count(x2+1)) for every bound in a table 1 listing."""
    by_bound: dict[int, dict[PolyFamily, int]] = {}
    for row in rows:
        by_bound.setdefault(row.bound, {})[row.family] = row.count

    ratios = []
    for bound in sorted(by_bound):
        counts = by_bound[bound]
        denominator = counts.get(PolyFamily.X2P1, 0)
        numerator = counts.get(PolyFamily.X2PXP1)
        if numerator is None or denominator == 0:
            ratios.append((bound, None))
        else:
            ratios.append((bound, numerator / denominator))
    return ratios


def published_count(family: PolyFamily, bound: int) -> Optional[int]:
    """The published figure for this family and bound, if there is one."""
    for table, families in TABLE_FAMILIES.items():
        if family in families:
            k = len(str(bound)) - 1
            if bound != 10 ** k:
                return None
            row = PUBLISHED_TABLES[table].get(k)
            return None if row is None else row[families.index(family)]
    return None


def known_erratum(family: PolyFamily, bound: int) -> Optional[int]:
    """The direct count for a published figure known to be wrong, else None."""
    if family is not PolyFamily.X2PXP1:
        return None
    k = len(str(bound)) - 1
    if bound != 10 ** k:
        return None
    return TABLE_1_ERRATA.get(k)
