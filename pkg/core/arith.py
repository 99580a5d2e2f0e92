"""
Arithmetic Kernels - exact big-integer operations behind every classifier

All comparisons against the two algebraic thresholds are decided with
integers only:

- golden: {2*sqrt(q)} > (sqrt(5)-1)/2, reduced to a two-step squaring test
- tau:    {2*sqrt(q)} > 1 - 4cos^2(3pi/7), the root in (0, 1) of
          t^3 + 2t^2 - t - 1, decided by comparing rational brackets
"""

import logging
from functools import lru_cache
from typing import Optional

import gmpy2

from config.settings import DIGIT_START
from core.errors import DomainError
from core.models import PolyFamily, ThresholdSide


logger = logging.getLogger(__name__)


def isqrt(n: int) -> int:
    """Largest r with r*r <= n."""
    if n < 0:
        raise DomainError(f"isqrt of a negative number: {n}")
    return int(gmpy2.isqrt(n))


def iroot(n: int, k: int) -> int:
    """Largest r with r**k <= n."""
    if n < 0 or k < 1:
        raise DomainError(f"iroot needs n >= 0 and k >= 1, got ({n}, {k})")
    root, _exact = gmpy2.iroot(n, k)
    return int(root)


def is_perfect_square(n: int) -> bool:
    return n >= 0 and bool(gmpy2.is_square(n))


def hasse_m(q: int) -> int:
    """m = floor(2*sqrt(q)), computed as isqrt(4q)."""
    if q < 1:
        raise DomainError(f"hasse_m needs q >= 1, got {q}")
    return isqrt(4 * q)


def _require_non_square(q: int, what: str):
    if q < 1:
        raise DomainError(f"{what} needs q >= 1, got {q}")
    if is_perfect_square(q):
        raise DomainError(f"{what} is undefined for the perfect square q = {q}")


# ==================== GOLDEN THRESHOLD ====================

def frac_gt_golden(q: int) -> ThresholdSide:
    """
    Side of (sqrt(5)-1)/2 on which {2*sqrt(q)} falls.

    With m = hasse_m(q) and B = 2m - 1:
        {2 sqrt q} > (sqrt5 - 1)/2  <=>  sqrt(16q) > B + sqrt5
                                    <=>  D = 16q - B^2 - 5 > 0 and D^2 > 20 B^2
    Equality would make sqrt(5) rational, so the answer is never a tie.
    """
    _require_non_square(q, "frac_gt_golden")
    m = hasse_m(q)
    b = 2 * m - 1
    d = 16 * q - b * b - 5
    if d > 0 and d * d > 20 * b * b:
        return ThresholdSide.ABOVE
    return ThresholdSide.BELOW


# ==================== TAU THRESHOLD ====================

def _tau_cubic(t: int, scale: int) -> int:
    """scale^3 * f(t/scale) for f(t) = t^3 + 2t^2 - t - 1."""
    return t * t * t + 2 * t * t * scale - t * scale * scale - scale ** 3


@lru_cache(maxsize=32)
def tau_bracket(digits: int) -> tuple[int, int, int]:
    """
    (lo, hi, scale) with lo/scale < tau < hi/scale and hi - lo = 1.

    scale = 10**digits. Bisection on the cubic, whose only root in (0, 1)
    is tau = 2cos(pi/7) - 1 ~ 0.8019377358; f < 0 below it on (0, 1).
    """
    scale = 10 ** digits
    lo, hi = 0, scale
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _tau_cubic(mid, scale) < 0:
            lo = mid
        else:
            hi = mid
    # f(hi) = 0 would make tau rational
    assert _tau_cubic(lo, scale) < 0 < _tau_cubic(hi, scale)
    return lo, hi, scale


def frac_bracket(q: int, digits: int) -> tuple[int, int]:
    """(F, scale) with F/scale <= {2 sqrt q} < (F+1)/scale, scale = 10**digits."""
    scale = 10 ** digits
    m = hasse_m(q)
    return isqrt(4 * q * scale * scale) - m * scale, scale


def frac_ge_tau(q: int) -> ThresholdSide:
    """
    Side of tau = 1 - 4cos^2(3pi/7) on which {2*sqrt(q)} falls.

    {2 sqrt q} is a quadratic irrational and tau a cubic one, so they never
    coincide and "greater than or equal" is decided as strictly greater.
    Brackets start at DIGIT_START digits and double until disjoint.
    """
    _require_non_square(q, "frac_ge_tau")
    digits = DIGIT_START
    while True:
        tau_lo, tau_hi, _scale = tau_bracket(digits)
        frac_lo, _ = frac_bracket(q, digits)
        if frac_lo >= tau_hi:
            return ThresholdSide.ABOVE
        if frac_lo + 1 <= tau_lo:
            return ThresholdSide.BELOW
        logger.debug("tau bracket overlap for q=%d at %d digits", q, digits)
        digits *= 2


def frac_2sqrt_approx(q: int) -> float:
    """{2 sqrt q} to double precision, for display only."""
    frac_lo, scale = frac_bracket(q, 20)
    return frac_lo / scale


# ==================== POLYNOMIAL REPRESENTATION ====================

def solve_quadratic_rep(q: int, family: PolyFamily) -> Optional[int]:
    """
    The x >= 0 with family(x) == q, or None.

    x^2 + c:     x = isqrt(q - c)
    x^2 + x + c: x = (isqrt(4q - 4c + 1) - 1) / 2
    """
    c = family.constant
    if family.linear == 0:
        if q < c:
            return None
        x = isqrt(q - c)
    else:
        disc = 4 * q - 4 * c + 1
        if disc < 1:
            return None
        s = isqrt(disc)
        if s * s != disc:
            return None
        x = (s - 1) // 2
    if family.evaluate(x) == q:
        return x
    return None


# ==================== MODULAR SQUARE ROOTS ====================

def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p: -1, 0 or 1."""
    return int(gmpy2.legendre(a % p, p))


def sqrt_mod_prime(a: int, p: int) -> Optional[int]:
    """A root r of r^2 = a (mod p) for an odd prime p (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1

    if s == 1:
        return pow(a, (p + 1) // 4, p)

    # Any quadratic non-residue
    z = 2
    while legendre(z, p) != -1:
        z += 1

    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return r
