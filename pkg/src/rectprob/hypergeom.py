"""The central multiple hypergeometric distribution H_m(n; s).

``X ~ H_m(n; s)`` counts the colours among ``n`` balls drawn without
replacement from an urn holding ``s_j`` balls of colour ``j``::

    P[X = x] = prod_j C(s_j, x_j) / C(t, n),    t = sum(s)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

from .errors import ValidationError
from .numeric import binomial, binomial_row
from .simplex import Rect, enumerate_simplex


@dataclass(frozen=True)
class ColumnSums:
    """Urn colour counts ``s`` and their total ``t``."""

    s: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(int(v) for v in self.s))
        if any(v < 0 for v in self.s):
            raise ValidationError(f"negative column sum in {self.s}", "s")

    @property
    def t(self) -> int:
        return sum(self.s)

    @property
    def m(self) -> int:
        return len(self.s)

    def __iter__(self):
        return iter(self.s)

    def __len__(self) -> int:
        return len(self.s)


def as_column_sums(s: ColumnSums | Iterable[int]) -> ColumnSums:
    return s if isinstance(s, ColumnSums) else ColumnSums(tuple(s))


@dataclass(frozen=True)
class MhgSpec:
    """Sample size ``n`` and column sums ``s`` of H_m(n; s), with ``m >= 2``."""

    n: int
    s: tuple[int, ...]

    def __post_init__(self):
        sums = as_column_sums(self.s)
        object.__setattr__(self, "s", sums.s)
        if sums.m < 2:
            raise ValidationError(f"need m >= 2 categories, got {sums.m}", "s")
        if not 0 <= self.n <= sums.t:
            raise ValidationError(f"sample size {self.n} outside [0, t={sums.t}]", "n")

    @property
    def t(self) -> int:
        return sum(self.s)

    @property
    def m(self) -> int:
        return len(self.s)

    def support_bounds(self, r: Rect) -> tuple[list[int], list[int]]:
        """Bounds of ``r`` clamped to ``[0, min(s_j, n)]``."""
        if r.m != self.m:
            raise ValidationError(f"rect has {r.m} coordinates, expected {self.m}", "rect")
        caps = [min(sj, self.n) for sj in self.s]
        lo = list(r.l)
        hi = [min(u, cap) for u, cap in zip(r.u, caps)]
        return lo, hi


def _check_dims(spec: MhgSpec, x: Sequence[int]) -> None:
    if len(x) != spec.m:
        raise ValidationError(f"vector has {len(x)} components, expected {spec.m}", "x")


def in_support(spec: MhgSpec, x: Sequence[int]) -> bool:
    """True iff ``0 <= x_j <= s_j`` for all ``j`` and ``sum(x) == n``."""
    _check_dims(spec, x)
    return sum(x) == spec.n and all(0 <= xj <= sj for xj, sj in zip(x, spec.s))


def pmf(spec: MhgSpec, x: Sequence[int]) -> Fraction:
    _check_dims(spec, x)
    if any(xj < 0 for xj in x) or sum(x) != spec.n:
        raise ValidationError(f"{tuple(x)} is not a composition of n={spec.n}", "x")
    num = 1
    for sj, xj in zip(spec.s, x):
        num *= binomial(sj, xj)
    return Fraction(num, binomial(spec.t, spec.n))


def event_prob_enumerate(spec: MhgSpec, r: Rect) -> Fraction:
    """P[X in R(l, u)] by summing the point probabilities over the event.

    Brute force; exponential in ``m``. Serves as the reference that faster
    routes are checked against.
    """
    lo, hi = spec.support_bounds(r)
    rows = [binomial_row(sj) for sj in spec.s]
    total = 0
    for x in enumerate_simplex(spec.m, spec.n, lo, hi):
        total += prod(map(tuple.__getitem__, rows, x))
    return Fraction(total, binomial(spec.t, spec.n))
