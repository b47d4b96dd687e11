"""Exact arithmetic: rationals with denominator a power of p, and iterated
exponentials ("towers") with an explicit representability budget.

A value num / p**exp is canonical when exp == 0 or p does not divide num.
The base p is context carried by the caller (typically a group), not stored
per value, so the low-level helpers work on plain (num, exp) int pairs and
the hot paths in the group engine can stay allocation-light.
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass

__all__ = [
    "DEFAULT_DIGIT_BUDGET",
    "PAdicRational",
    "RepresentabilityError",
    "TowerExponent",
    "decimal_digits",
    "exceeds_decimal_budget",
    "padic_add",
    "padic_canonical",
    "padic_floor",
    "padic_frac",
    "padic_is_integer",
    "padic_neg",
    "padic_parse",
    "padic_scale",
    "padic_text",
    "padic_valuation",
    "tower",
]

DEFAULT_DIGIT_BUDGET = 10**6

# digits(n) ~ bit_length(n) * log10(2); scaled integer constants keep the
# quick bounds exact (no float rounding surprises near the budget edge).
_LOG10_2_NUM = 30102999566
_LOG10_2_DEN = 10**11

# CPython caps decimal rendering of large ints (default 4300 digits).  The
# lab legitimately prints exact values up to the digit budget, so lift the
# cap once here rather than forcing every caller to know about it.
if hasattr(sys, "set_int_max_str_digits"):
    if sys.get_int_max_str_digits() < DEFAULT_DIGIT_BUDGET + 100:
        sys.set_int_max_str_digits(DEFAULT_DIGIT_BUDGET + 100)


class RepresentabilityError(ValueError):
    """An exact value would exceed the configured decimal digit budget."""


def padic_canonical(num: int, exp: int, p: int) -> tuple[int, int]:
    """Reduce num / p**exp so that exp == 0 or p does not divide num."""
    if num == 0:
        return (0, 0)
    while exp > 0 and num % p == 0:
        num //= p
        exp -= 1
    return (num, exp)


def padic_add(x: tuple[int, int], y: tuple[int, int], p: int) -> tuple[int, int]:
    xn, xe = x
    yn, ye = y
    if xe == ye:
        return padic_canonical(xn + yn, xe, p)
    if xe < ye:
        return padic_canonical(xn * p ** (ye - xe) + yn, ye, p)
    return padic_canonical(xn + yn * p ** (xe - ye), xe, p)


def padic_neg(x: tuple[int, int]) -> tuple[int, int]:
    return (-x[0], x[1])


def padic_scale(x: tuple[int, int], k: int, p: int) -> tuple[int, int]:
    """Multiply by p**k (k may be negative)."""
    num, exp = x
    if num == 0:
        return (0, 0)
    exp -= k
    if exp < 0:
        return (num * p**-exp, 0)
    return padic_canonical(num, exp, p)


def padic_is_integer(x: tuple[int, int]) -> bool:
    return x[1] == 0


def padic_valuation(x: tuple[int, int], p: int) -> int | None:
    """Exponent of p in x (None for x = 0).  Canonical inputs with exp > 0
    have p-free numerators, so only the integer case needs trial division."""
    num, exp = x
    if num == 0:
        return None
    if exp > 0:
        return -exp
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    return v


def padic_floor(x: tuple[int, int], p: int) -> int:
    num, exp = x
    if exp == 0:
        return num
    return num // p**exp


def padic_frac(x: tuple[int, int], p: int) -> tuple[int, int]:
    """Fractional part in [0, 1)."""
    num, exp = x
    if exp == 0:
        return (0, 0)
    return padic_canonical(num % p**exp, exp, p)


def padic_text(x: tuple[int, int], p: int) -> str:
    num, exp = x
    if exp == 0:
        return str(num)
    return f"{num}/{p}^{exp}"


_PADIC_RE = re.compile(r"^(-?\d+)(?:/(\d+)(?:\^(\d+))?)?$")


def padic_parse(text: str, p: int) -> tuple[int, int]:
    """Parse "num", "num/p" or "num/p^e" into a canonical (num, exp) pair."""
    m = _PADIC_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed p-adic rational: {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return padic_canonical(num, 0, p)
    base = int(m.group(2))
    if base != p:
        raise ValueError(f"denominator base {base} does not match p = {p}")
    exp = 1 if m.group(3) is None else int(m.group(3))
    return padic_canonical(num, exp, p)


@dataclass(frozen=True, slots=True)
class PAdicRational:
    """Canonical num / p**exp; the base p lives in the surrounding context."""

    num: int
    exp: int

    def __post_init__(self) -> None:
        if self.exp < 0:
            raise ValueError(f"denominator exponent must be >= 0, got {self.exp}")

    @classmethod
    def make(cls, num: int, exp: int, p: int) -> "PAdicRational":
        return cls(*padic_canonical(num, exp, p))

    @classmethod
    def parse(cls, text: str, p: int) -> "PAdicRational":
        return cls(*padic_parse(text, p))

    def as_tuple(self) -> tuple[int, int]:
        return (self.num, self.exp)

    def text(self, p: int) -> str:
        return padic_text((self.num, self.exp), p)

    def add(self, other: "PAdicRational", p: int) -> "PAdicRational":
        return PAdicRational(*padic_add(self.as_tuple(), other.as_tuple(), p))

    def scale(self, k: int, p: int) -> "PAdicRational":
        return PAdicRational(*padic_scale(self.as_tuple(), k, p))

    def neg(self) -> "PAdicRational":
        return PAdicRational(-self.num, self.exp)


def decimal_digits(n: int) -> int:
    """Exact number of decimal digits of abs(n); 0 has one digit."""
    if n == 0:
        return 1
    n = abs(n)
    d = max(1, n.bit_length() * _LOG10_2_NUM // _LOG10_2_DEN)
    while 10**d <= n:
        d += 1
    while d > 1 and 10 ** (d - 1) > n:
        d -= 1
    return d


def exceeds_decimal_budget(n: int, budget: int) -> bool:
    """True iff abs(n) has more than `budget` decimal digits.

    Uses bit-length bounds for a quick answer and falls back to an exact
    comparison only near the boundary.
    """
    bits = n.bit_length()
    # digits <= bits * log10(2) + 1 and digits >= (bits - 1) * log10(2).
    if bits * _LOG10_2_NUM // _LOG10_2_DEN + 1 <= budget:
        return False
    if (bits - 1) * _LOG10_2_NUM // _LOG10_2_DEN >= budget + 1:
        return True
    return decimal_digits(n) > budget


@dataclass(frozen=True, slots=True)
class TowerExponent:
    """The k-fold iterated power ^k(p): 1 for k = 0, else p ** ^(k-1)(p).

    `value` is the exact integer when its decimal size fits the digit budget
    the tower was built under, and None otherwise.  `digits` is the exact
    decimal digit count when the value is present.
    """

    height: int
    base: int
    value: int | None
    digits: int | None = None


def tower(p: int, k: int, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> TowerExponent:
    if p < 2:
        raise ValueError(f"tower base must be >= 2, got {p}")
    if k < 0:
        raise ValueError(f"tower height must be >= 0, got {k}")
    if digit_budget < 1:
        raise ValueError(f"digit budget must be >= 1, got {digit_budget}")
    value = 1
    for _ in range(k):
        # Guaranteed-reject bound: digits(p**value) >= (bitlen(p)-1) * value * log10(2).
        low = (p.bit_length() - 1) * value * _LOG10_2_NUM // _LOG10_2_DEN
        if low > digit_budget:
            return TowerExponent(k, p, None)
        candidate = p**value
        if exceeds_decimal_budget(candidate, digit_budget):
            return TowerExponent(k, p, None)
        value = candidate
    return TowerExponent(k, p, value, decimal_digits(value))
