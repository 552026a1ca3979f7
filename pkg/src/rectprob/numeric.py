"""Exact integer and rational helpers.

Every probability in the package is a :class:`fractions.Fraction`; floats
never enter a comparison. Decimal strings are for display only.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import ValidationError

ExactRational = Fraction

DEFAULT_DIGITS = 6


@lru_cache(maxsize=512)
def binomial_row(n: int) -> tuple[int, ...]:
    """Row ``n`` of Pascal's triangle, ``(C(n,0), ..., C(n,n))``."""
    if n < 0:
        raise ValidationError(f"row index must be non-negative, got {n}", "n")
    row = [1] * (n + 1)
    for k in range(1, n // 2 + 1):
        row[k] = row[n - k] = row[k - 1] * (n - k + 1) // k
    return tuple(row)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when ``k`` is outside ``[0, n]``."""
    if n < 0:
        raise ValidationError(f"n must be non-negative, got {n}", "n")
    if k < 0 or k > n:
        return 0
    return binomial_row(n)[k]


def multinomial_coeff(n: int, x: Sequence[int]) -> int:
    """n! / (x_1! ... x_m!) for a composition ``x`` of ``n``."""
    if any(xj < 0 for xj in x):
        raise ValidationError(f"negative component in {tuple(x)}", "x")
    if sum(x) != n:
        raise ValidationError(f"components of {tuple(x)} do not sum to {n}", "x")
    out = 1
    remaining = n
    for xj in x:
        out *= binomial(remaining, xj)
        remaining -= xj
    return out


def rational(num: int, den: int = 1) -> Fraction:
    """Reduced fraction ``num/den`` with a positive denominator."""
    if den == 0:
        raise ValidationError("zero denominator", "den")
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or an integer string."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            return rational(int(num), int(den))
        return Fraction(int(text))
    except ValueError as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"not a rational: {text!r}") from None


def format_exact(q: Fraction | int) -> str:
    """Serialize as ``"num/den"`` in lowest terms (``0`` becomes ``"0/1"``)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def format_decimal(q: Fraction | int, digits: int = DEFAULT_DIGITS) -> str:
    """Fixed-point rendering with ``digits`` places, rounding half to even."""
    if digits < 0:
        raise ValidationError(f"digits must be non-negative, got {digits}", "precision")
    q = Fraction(q)
    # round() on a Fraction is exact and uses banker's rounding
    scaled = round(q * 10**digits)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
