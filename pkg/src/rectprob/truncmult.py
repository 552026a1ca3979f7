"""Multinomial frequencies observed under interval constraints.

For ``X ~ Mult_m(n, p)`` conditioned on ``X in R(l, u)`` this module computes
the event probability, the conditional mean ``mu`` and the conditional second
moments, then compares the variance of ``c.X`` with the variance it would
have under an unconstrained multinomial with the same mean::

    c' (Diag[mu] - mu mu' / n) c

Two independent routes compute the moments: a sum over the event, and
coefficient extraction from per-category truncated exponential series
``sum_{k in R_j} p_j^k z^k / k!``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial, lcm, prod
from typing import Iterator, Sequence

from ._parallel import parallel_map
from .convolution import poly_mul
from .errors import ValidationError, ZeroProbabilityError
from .numeric import binomial, format_decimal, format_exact, multinomial_coeff
from .simplex import Rect, enumerate_simplex


@dataclass(frozen=True)
class MultinomialSpec:
    n: int
    p: tuple[Fraction, ...]

    def __post_init__(self):
        p = tuple(Fraction(v) for v in self.p)
        object.__setattr__(self, "p", p)
        if len(p) < 2:
            raise ValidationError(f"need m >= 2 categories, got {len(p)}", "p")
        if any(v < 0 for v in p):
            raise ValidationError("probabilities must be non-negative", "p")
        if sum(p) != 1:
            raise ValidationError(f"probabilities sum to {format_exact(sum(p))}, not 1", "p")
        if self.n < 0:
            raise ValidationError(f"sample size must be non-negative, got {self.n}", "n")

    @property
    def m(self) -> int:
        return len(self.p)

    def scaled(self) -> tuple[int, tuple[int, ...]]:
        """Common denominator ``D`` and integer numerators ``a`` with ``p = a / D``."""
        d = lcm(*(v.denominator for v in self.p))
        return d, tuple(int(v * d) for v in self.p)

    def bounds(self, r: Rect) -> tuple[list[int], list[int]]:
        """``r`` clamped to ``[0, n]``, with zero-probability categories pinned at 0."""
        if r.m != self.m:
            raise ValidationError(f"rect has {r.m} coordinates, expected {self.m}", "rect")
        hi = [min(u, self.n) if pj > 0 else min(u, 0) for u, pj in zip(r.u, self.p)]
        return list(r.l), hi


@dataclass(frozen=True)
class CensoredMoments:
    """Conditional moments of ``X`` given ``X in R``."""

    n: int
    event_prob: Fraction
    mu: tuple[Fraction, ...]
    second: tuple[tuple[Fraction, ...], ...]

    @cached_property
    def cov(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(
            tuple(self.second[j][k] - self.mu[j] * self.mu[k] for k in range(len(self.mu)))
            for j in range(len(self.mu))
        )

    def to_dict(self, digits: int = 6) -> dict:
        def pair(q):
            return {"exact": format_exact(q), "decimal": format_decimal(q, digits)}

        return {
            "n": self.n,
            "event_prob": pair(self.event_prob),
            "mu": [pair(v) for v in self.mu],
            "second": [[pair(v) for v in row] for row in self.second],
            "cov": [[pair(v) for v in row] for row in self.cov],
        }


def multinomial_pmf(spec: MultinomialSpec, x: Sequence[int]) -> Fraction:
    if len(x) != spec.m:
        raise ValidationError(f"vector has {len(x)} components, expected {spec.m}", "x")
    coeff = multinomial_coeff(spec.n, x)
    out = Fraction(coeff)
    for pj, xj in zip(spec.p, x):
        out *= pj**xj
    return out


def event_probability(spec: MultinomialSpec, r: Rect) -> Fraction:
    """P[X in R] for ``X ~ Mult(n, p)``; zero for an empty event."""
    lo, hi = spec.bounds(r)
    return sum((multinomial_pmf(spec, x) for x in enumerate_simplex(spec.m, spec.n, lo, hi)), Fraction(0))


def _finish(n: int, mass: int, first: Sequence[int], second: Sequence[Sequence[int]], scale: int) -> CensoredMoments:
    if mass == 0:
        raise ZeroProbabilityError("the constrained event has probability zero", "rect")
    m = len(first)
    return CensoredMoments(
        n=n,
        event_prob=Fraction(mass, scale),
        mu=tuple(Fraction(v, mass) for v in first),
        second=tuple(tuple(Fraction(second[j][k], mass) for k in range(m)) for j in range(m)),
    )


def censored_moments_enumerate(spec: MultinomialSpec, r: Rect) -> CensoredMoments:
    """Moments by summing over every point of the event.

    Each point carries the integer weight ``multinomial(n, x) * prod a_j^x_j``
    where ``p = a / D``; the event probability is the weight total over ``D^n``.
    """
    d, a = spec.scaled()
    lo, hi = spec.bounds(r)
    m = spec.m
    mass = 0
    first = [0] * m
    second = [[0] * m for _ in range(m)]
    for x in enumerate_simplex(m, spec.n, lo, hi):
        w = multinomial_coeff(spec.n, x) * prod(aj**xj for aj, xj in zip(a, x))
        if not w:
            continue
        mass += w
        for j in range(m):
            wx = w * x[j]
            first[j] += wx
            for k in range(m):
                second[j][k] += wx * x[k]
    return _finish(spec.n, mass, first, second, d**spec.n)


def _coef(polys: Sequence[Sequence[int]], n: int) -> int:
    """Coefficient of ``z^n`` in the product, truncating above degree ``n``."""
    acc = [1]
    for poly in polys:
        acc = poly_mul(acc, poly)[: n + 1]
    return acc[n] if n < len(acc) else 0


def censored_moments_series(spec: MultinomialSpec, r: Rect) -> CensoredMoments:
    """Moments by coefficient extraction from truncated exponential series.

    Category ``j`` contributes ``g_j(z) = sum_{k in R_j} a_j^k (n!/k!) z^k``;
    ``(z d/dz) g_j`` and ``(z d/dz)^2 g_j`` supply the first and second moment
    terms. The product's ``z^n`` coefficient equals ``n!^(m-1) D^n`` times the
    corresponding expectation restricted to the event.
    """
    d, a = spec.scaled()
    lo, hi = spec.bounds(r)
    n, m = spec.n, spec.m
    nf = factorial(n)
    base, once, twice = [], [], []
    for aj, lj, uj in zip(a, lo, hi):
        g = [aj**k * (nf // factorial(k)) if lj <= k <= uj else 0 for k in range(n + 1)]
        base.append(g)
        once.append([k * c for k, c in enumerate(g)])
        twice.append([k * k * c for k, c in enumerate(g)])

    def others(*skip: int) -> list[list[int]]:
        return [base[i] for i in range(m) if i not in skip]

    mass = _coef(base, n)
    first = [_coef([once[j]] + others(j), n) for j in range(m)]
    second = [[0] * m for _ in range(m)]
    for j in range(m):
        second[j][j] = _coef([twice[j]] + others(j), n)
        for k in range(j + 1, m):
            second[j][k] = second[k][j] = _coef([once[j], once[k]] + others(j, k), n)
    return _finish(n, mass, first, second, nf ** (m - 1) * d**n)


def censored_moments(spec: MultinomialSpec, r: Rect, method: str = "series") -> CensoredMoments:
    """Conditional moments of ``X ~ Mult(n, p)`` given ``X in R``.

    Raises :class:`ZeroProbabilityError` when ``P[X in R] = 0``.
    """
    if method == "series":
        return censored_moments_series(spec, r)
    if method == "enumerate":
        return censored_moments_enumerate(spec, r)
    raise ValidationError(f"unknown method {method!r}", "method")


def _nonzero(mom: CensoredMoments, c: Sequence) -> list[tuple[int, Fraction]]:
    """``(j, c_j)`` for the non-zero entries of ``c``."""
    if len(c) != len(mom.mu):
        raise ValidationError(f"c has {len(c)} entries, expected {len(mom.mu)}", "c")
    return [(j, Fraction(v)) for j, v in enumerate(c) if v]


def variance_of_combo(mom: CensoredMoments, c: Sequence) -> Fraction:
    """Conditional variance of ``c.X``."""
    terms = _nonzero(mom, c)
    cov = mom.cov
    return sum((cj * ck * cov[j][k] for j, cj in terms for k, ck in terms), Fraction(0))


def reference_variance(mom: CensoredMoments, n: int, c: Sequence) -> Fraction:
    """Variance of ``c.Y`` for ``Y ~ Mult(n, mu/n)``."""
    terms = _nonzero(mom, c)
    if sum(mom.mu) != n:
        raise ValidationError(f"mean sums to {format_exact(sum(mom.mu))}, not n={n}", "n")
    if n == 0:
        return Fraction(0)
    lin = sum((cj * mom.mu[j] for j, cj in terms), Fraction(0))
    quad = sum((cj * cj * mom.mu[j] for j, cj in terms), Fraction(0))
    return quad - lin * lin / n


def variance_reduction(spec: MultinomialSpec, r: Rect, c: Sequence) -> Fraction:
    """``reference_variance - variance_of_combo`` under the constraint ``r``."""
    mom = censored_moments(spec, r)
    return reference_variance(mom, spec.n, c) - variance_of_combo(mom, c)


def _compositions(n: int, k: int) -> int:
    if k == 0:
        return 1 if n == 0 else 0
    return binomial(n + k - 1, k - 1)


def constraint_profile(spec: MultinomialSpec, r: Rect) -> tuple[int, frozenset[int]]:
    """Size of the event within the support and the categories it pins at zero."""
    lo, hi = spec.bounds(r)
    size = 0
    top = [0] * spec.m
    for x in enumerate_simplex(spec.m, spec.n, lo, hi):
        size += 1
        top = [max(a, b) for a, b in zip(top, x)]
    return size, frozenset(j for j in range(spec.m) if top[j] == 0)


def is_nontrivial(spec: MultinomialSpec, r: Rect) -> bool:
    """Whether ``r`` does more than pin some categories at zero.

    Pinning categories at zero leaves a plain multinomial on the remaining
    ones, so such events (including the whole support) reduce no variance.
    An empty event is not non-trivial either.
    """
    size, pinned = constraint_profile(spec, r)
    if size == 0:
        return False
    free = sum(1 for j, pj in enumerate(spec.p) if pj > 0 and j not in pinned)
    return size < _compositions(spec.n, free)


# -- sweep -------------------------------------------------------------------


def rational_grid(m: int, denom: int) -> Iterator[tuple[Fraction, ...]]:
    """Probability vectors with entries in ``{0, 1/denom, ..., 1}``."""
    for cut in itertools.combinations_with_replacement(range(denom + 1), m - 1):
        edges = (0,) + cut + (denom,)
        yield tuple(Fraction(edges[i + 1] - edges[i], denom) for i in range(m))


def distinct_events(m: int, n: int) -> list[Rect]:
    """One rect per distinct subset ``R(l, u)`` of the simplex, bounds in ``[0, n]``.

    Moments depend on a rect only through the set of points it selects.
    """
    points = list(enumerate_simplex(m, n))
    intervals = [(lo, hi) for lo in range(n + 1) for hi in range(lo, n + 1)]
    # per coordinate and interval: bitmask of the points it admits
    masks = [
        {iv: sum(1 << i for i, x in enumerate(points) if iv[0] <= x[j] <= iv[1]) for iv in intervals}
        for j in range(m)
    ]
    seen: dict[int, Rect] = {}
    for pairs in itertools.product(intervals, repeat=m):
        key = ~0
        for j, iv in enumerate(pairs):
            key &= masks[j][iv]
        if key and key not in seen:
            seen[key] = Rect.from_pairs(pairs)
    return list(seen.values())


@dataclass
class Tally:
    checked: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, detail) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail)


@dataclass
class ReductionSweep:
    """Counts and failures for each moment property checked by :func:`reduction_sweep`."""

    cross_validation: Tally = field(default_factory=Tally)
    mean_sum: Tally = field(default_factory=Tally)
    cov_row_sums: Tally = field(default_factory=Tally)
    full_rect_zero: Tally = field(default_factory=Tally)
    example_zero: Tally = field(default_factory=Tally)
    component_positive: Tally = field(default_factory=Tally)
    trivial_zero: Tally = field(default_factory=Tally)

    def tallies(self) -> dict[str, Tally]:
        return {k: v for k, v in vars(self).items() if isinstance(v, Tally)}

    @property
    def ok(self) -> bool:
        return all(not t.failures for t in self.tallies().values())


def _unit(m: int, j: int) -> tuple[int, ...]:
    return tuple(int(i == j) for i in range(m))


def reduction_sweep(
    max_m: int = 3, max_n: int = 8, denom: int = 8, min_n: int = 1, jobs: int = 1
) -> ReductionSweep:
    """Check the moment and variance-reduction properties over a grid.

    Covers ``2 <= m <= max_m``, ``min_n <= n <= max_n``, every ``p`` on the
    ``1/denom`` grid and every distinct rectangular event. Each property has
    its own :class:`Tally`.
    """
    cells = [(m, n, denom) for m in range(2, max_m + 1) for n in range(min_n, max_n + 1)]
    out = ReductionSweep()
    for part in parallel_map(_reduction_cell, cells, jobs, chunksize=1):
        for name, tally in part.tallies().items():
            mine = getattr(out, name)
            mine.checked += tally.checked
            mine.failures.extend(tally.failures)
    return out


def _reduction_cell(cell: tuple[int, int, int]) -> ReductionSweep:
    m, n, denom = cell
    out = ReductionSweep()
    events = distinct_events(m, n)
    full = Rect.full([n] * m)
    units = [_unit(m, j) for j in range(m)]
    for p in rational_grid(m, denom):
        spec = MultinomialSpec(n, p)
        for r in events:
            _sweep_cell(out, spec, r, units, is_full=False)
        _sweep_cell(out, spec, full, units, is_full=True)
        if m == 3:
            c = (-p[1], p[0], 0)
            for u3 in range(n):
                r = Rect((0, 0, 0), (n, n, u3))
                try:
                    red = variance_reduction(spec, r, c)
                except ZeroProbabilityError:
                    continue
                out.example_zero.record(red == 0, (n, p, str(r), red))
    return out


def _sweep_cell(out: ReductionSweep, spec: MultinomialSpec, r: Rect, units, *, is_full: bool) -> None:
    detail = (spec.n, spec.p, str(r))
    try:
        fast = censored_moments_series(spec, r)
    except ZeroProbabilityError:
        fast = None
    try:
        slow = censored_moments_enumerate(spec, r)
    except ZeroProbabilityError:
        slow = None
    out.cross_validation.record(fast == slow, detail)
    if fast is None:
        return
    m, n = spec.m, spec.n
    out.mean_sum.record(sum(fast.mu) == n, detail)
    out.cov_row_sums.record(all(sum(row) == 0 for row in fast.cov), detail)

    def reduction(c):
        return reference_variance(fast, n, c) - variance_of_combo(fast, c)

    if is_full:
        combos = units + [(1,) * m, tuple(range(1, m + 1)), (-spec.p[1], spec.p[0]) + (0,) * (m - 2)]
        out.full_rect_zero.record(all(reduction(c) == 0 for c in combos), detail)
        return
    if is_nontrivial(spec, r):
        _, pinned = constraint_profile(spec, r)
        for j in range(m):
            if j not in pinned and spec.p[j] > 0:
                out.component_positive.record(reduction(units[j]) > 0, detail + (j,))
    else:
        out.trivial_zero.record(all(reduction(c) == 0 for c in units), detail)
