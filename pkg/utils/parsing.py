"""
Input Parsing - exact integer bounds and classify input lines
"""

import re
from decimal import Decimal, InvalidOperation
from typing import Optional

from core.arith import iroot
from core.errors import ConfigError, DomainError
from core.models import PrimePower
from core.primes import is_prime


_POWER_RE = re.compile(r"^(\d+)\s*(?:\^|\*\*)\s*(\d+)$")


def parse_bound(text: str) -> int:
    """
    Parse "1e16", "10^16", "10**16" or plain decimal to an exact integer.

    Scientific notation goes through Decimal, so 1e16 is 10**16 exactly.
    """
    cleaned = str(text).strip().replace("_", "").replace(",", "")
    match = _POWER_RE.match(cleaned)
    if match:
        return int(match.group(1)) ** int(match.group(2))
    try:
        value = Decimal(cleaned)
    except InvalidOperation:
        raise ConfigError(f"Not a number: {text!r}") from None
    if not value.is_finite() or value != value.to_integral_value():
        raise ConfigError(f"Not an integer: {text!r}")
    return int(value)


def factor_prime_power(q: int) -> PrimePower:
    """Write q as p^e with p prime, trying the largest exponent first."""
    if q < 2:
        raise DomainError(f"{q} is not a prime power")
    for e in range(q.bit_length(), 0, -1):
        p = iroot(q, e)
        if p >= 2 and p ** e == q and is_prime(p):
            return PrimePower(p, e)
    raise DomainError(f"{q} is not a prime power")


def parse_classify_line(line: str) -> Optional[PrimePower]:
    """
    One classify input line: "p e", "p,e", "p^e" or a decimal q.

    Blank lines and lines starting with # give None.
    """
    text = line.strip()
    if not text or text.startswith("#"):
        return None

    match = _POWER_RE.match(text)
    if match:
        p, e = int(match.group(1)), int(match.group(2))
    else:
        tokens = text.replace(",", " ").split()
        if len(tokens) == 1:
            return factor_prime_power(parse_bound(tokens[0]))
        if len(tokens) != 2:
            raise DomainError(f"Expected 'p e', 'p^e' or q, got {line.strip()!r}")
        p, e = parse_bound(tokens[0]), parse_bound(tokens[1])

    if e < 1 or not is_prime(p):
        raise DomainError(f"{p}^{e} is not a prime power")
    return PrimePower(p, e)
