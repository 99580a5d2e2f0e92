"""
Genus 2 and Genus 3 Classification

Genus 2: q is special when it is not a square and either p | m or q is
represented by x^2+1, x^2+x+1 or x^2+x+2. Special q lose 1 or 2 points
against the Weil bound depending on the side of (sqrt5-1)/2 on which
{2 sqrt q} falls. Squares are settled: defect 0 except q = 4 (3), q = 9 (2).

Genus 3 (odd e only): the minimal relative defect is 0 unless
  1. q = x^2 + r,     r in {1, 2}, r <= x   -> a = 2
  2. q = x^2 + x + r, r in {1, 3}, r <= x   -> a = 3
  3. p | m                                  -> a = 2 above tau, else 3
When several clauses fire the smallest a wins.
"""

import logging
from typing import Iterable, Optional

from core.arith import frac_ge_tau, frac_gt_golden, hasse_m, solve_quadratic_rep
from core.errors import DomainError
from core.models import (
    ClassificationSummary,
    Genus2Reason,
    Genus2Result,
    Genus3Reason,
    Genus3Result,
    PolyFamily,
    PrimePower,
    ThresholdSide,
)


logger = logging.getLogger(__name__)

GENUS2_FAMILIES = (PolyFamily.X2P1, PolyFamily.X2PXP1, PolyFamily.X2PXP2)
SQUARE_DEFECTS = {4: 3, 9: 2}


# ==================== GENUS 2 ====================

def genus2_special(pp: PrimePower) -> Optional[tuple[Genus2Reason, Optional[PolyFamily]]]:
    """
    (reason, family) if q is special, else None.

    Representability is always checked directly, including for e >= 2
    where only 2^3, 2^5, 2^13 and 7^3 can qualify.
    """
    if pp.is_square:
        return None
    if hasse_m(pp.q) % pp.p == 0:
        return Genus2Reason.SPECIAL_DIVIDES_M, None
    for family in GENUS2_FAMILIES:
        if solve_quadratic_rep(pp.q, family) is not None:
            return Genus2Reason.SPECIAL_POLY_REP, family
    return None


def genus2_defect(pp: PrimePower) -> Genus2Result:
    """Weil-bound defect for genus 2 curves over F_q."""
    q = pp.q
    if pp.is_square:
        if q in SQUARE_DEFECTS:
            return Genus2Result(SQUARE_DEFECTS[q], Genus2Reason.SQUARE_EXCEPTION, q=q)
        return Genus2Result(0, Genus2Reason.NONSPECIAL, q=q)

    special = genus2_special(pp)
    if special is None:
        return Genus2Result(0, Genus2Reason.NONSPECIAL, q=q)

    reason, family = special
    side = frac_gt_golden(q)
    defect = 1 if side is ThresholdSide.ABOVE else 2
    return Genus2Result(defect, reason, family=family, threshold_side=side, q=q)


# ==================== GENUS 3 ====================

def _represented_with_side_condition(q: int, family: PolyFamily) -> bool:
    """q = family(x) for some integer x with the clause's r <= x."""
    x = solve_quadratic_rep(q, family)
    return x is not None and family.constant <= x


def genus3_mrd(pp: PrimePower) -> Genus3Result:
    """Minimal relative defect of genus 3 curves over F_q, q not a square."""
    if pp.is_square:
        raise DomainError(
            f"genus 3 minimal relative defect is only computed for odd exponents, got {pp.label}"
        )

    q = pp.q
    # (a, reason, r, side, clause name) for every clause that applies
    fired: list[tuple[int, Genus3Reason, Optional[int], Optional[ThresholdSide], str]] = []

    for family in (PolyFamily.X2P1, PolyFamily.X2P2):
        if _represented_with_side_condition(q, family):
            r = family.constant
            fired.append((2, Genus3Reason.X2R, r, None, f"X2R(r={r})"))

    for family in (PolyFamily.X2PXP1, PolyFamily.X2PXP3):
        if _represented_with_side_condition(q, family):
            r = family.constant
            fired.append((3, Genus3Reason.X2XR, r, None, f"X2XR(r={r})"))

    if hasse_m(q) % pp.p == 0:
        side = frac_ge_tau(q)
        a = 2 if side is ThresholdSide.ABOVE else 3
        fired.append((a, Genus3Reason.DIVIDES_M, None, side, f"DividesM({side.value})"))

    if not fired:
        return Genus3Result(0, Genus3Reason.NONE)

    names = tuple(item[4] for item in fired)
    if len(fired) > 1:
        logger.info("q=%d: several genus 3 clauses apply: %s", q, ", ".join(names))

    a, reason, r, side, _name = min(fired, key=lambda item: item[0])
    return Genus3Result(a, reason, r=r, threshold_side=side, fired=names)


# ==================== AGGREGATES ====================

def classify_dw_list(records: Iterable[PrimePower]) -> ClassificationSummary:
    """Defect 1/2 and mrd 2/3 counts over DW numbers; non-DW entries are rejected."""
    from core.dw import is_dw

    summary = ClassificationSummary()
    for index, pp in enumerate(records):
        if not is_dw(pp.p, pp.e):
            raise DomainError(f"entry {index} ({pp.label}) is not a Deuring-Waterhouse number")

        if genus2_defect(pp).defect == 1:
            summary.defect1_count += 1
        else:
            summary.defect2_count += 1

        if genus3_mrd(pp).mrd == 2:
            summary.mrd2_count += 1
        else:
            summary.mrd3_count += 1

    return summary


def genus2_prime_defects(family: PolyFamily, bound: int) -> dict[int, int]:
    """
    Histogram {defect: count} of the genus 2 defect over the primes
    family(x) counted by the sieve up to bound.
    """
    if family not in (PolyFamily.X2P1, PolyFamily.X2PXP1):
        raise DomainError(f"genus 2 prime scan supports x2+1 and x2+x+1, not {family.label}")

    from core.polysieve import prime_x_values

    histogram: dict[int, int] = {}
    for x in prime_x_values(family, bound):
        defect = genus2_defect(PrimePower(family.evaluate(x), 1)).defect
        histogram[defect] = histogram.get(defect, 0) + 1
    return histogram
