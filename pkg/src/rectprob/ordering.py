"""Checks of the stochastic ordering of symmetric core probabilities.

For a symmetric core ``B`` and ``X ~ H_m(n; s)``, ``P_n[X in B]`` should be
non-increasing as ``n`` moves away from ``t/2`` in either direction, equal at
``n`` and ``t - n``, and the convolution profile should satisfy::

    w_n * (t - n) >= w_{n+1} * (n + 1)    for ceil(t/2) <= n < t

Every comparison here is exact. Sweeps enumerate small parameter grids and
report any cell that breaks a property.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .convolution import ConvolutionProfile, event_prob_convolution, rect_profile
from ._parallel import parallel_map
from .errors import ValidationError
from .hypergeom import ColumnSums, MhgSpec, as_column_sums, event_prob_enumerate
from .numeric import format_decimal, format_exact
from .simplex import Rect, SymmetricCore, make_symmetric_core

def _ceil_half(t: int) -> int:
    return (t + 1) // 2


def scan_over_n(s: ColumnSums | Sequence[int], r: Rect) -> list[Fraction]:
    """``P_n[X in R]`` for ``n = 0..t`` from a single convolution profile."""
    s = as_column_sums(s)
    if s.m < 2:
        raise ValidationError(f"need m >= 2 categories, got {s.m}", "s")
    profile = rect_profile(s, r)
    return [profile.prob(n) for n in range(s.t + 1)]


@dataclass
class OrderingReport:
    s: tuple[int, ...]
    core: SymmetricCore
    probs: list[Fraction]
    upper_monotone: bool
    lower_monotone: bool
    symmetric: bool
    first_violation: tuple[int, int, Fraction, Fraction] | None = None

    @property
    def ok(self) -> bool:
        return self.upper_monotone and self.lower_monotone and self.symmetric

    def to_dict(self, digits: int = 6) -> dict:
        fv = None
        if self.first_violation is not None:
            n, n2, pn, pn2 = self.first_violation
            fv = {"n": n, "n_prime": n2, "p_n": format_exact(pn), "p_n_prime": format_exact(pn2)}
        return {
            "s": list(self.s),
            "core": str(self.core),
            "upper_monotone": self.upper_monotone,
            "lower_monotone": self.lower_monotone,
            "symmetric": self.symmetric,
            "first_violation": fv,
            "probs": [
                {"n": n, "prob_exact": format_exact(p), "prob_decimal": format_decimal(p, digits)}
                for n, p in enumerate(self.probs)
            ],
        }


def _monotone_violation(
    probs: Sequence[Fraction], lo: int, hi: int, *, away_from: str
) -> tuple[int, int, Fraction, Fraction] | None:
    """First pair in ``[lo, hi]`` where the probability nearer ``t/2`` is smaller.

    ``away_from="below"`` checks ``P_n >= P_{n'}`` for ``lo <= n < n' <= hi``;
    ``"above"`` checks ``P_n >= P_{n'}`` for ``lo <= n' < n <= hi``.
    """
    for a, b in itertools.combinations(range(lo, hi + 1), 2):
        n, n2 = (a, b) if away_from == "below" else (b, a)
        if probs[n] < probs[n2]:
            return n, n2, probs[n], probs[n2]
    return None


def check_theorem1(s: ColumnSums | Sequence[int], core: SymmetricCore) -> OrderingReport:
    """Scan ``P_n[X in B]`` over all ``n`` and test both monotone ranges and symmetry.

    Ties count as satisfying the weak inequality.
    """
    s = as_column_sums(s)
    if not isinstance(core, SymmetricCore):
        raise ValidationError("expected a SymmetricCore", "core")
    if core.s != s.s:
        raise ValidationError(f"core is centred on s={core.s}, not {s.s}", "core")
    probs = scan_over_n(s, core.rect)
    t = s.t
    upper = _monotone_violation(probs, _ceil_half(t), t, away_from="below")
    lower = _monotone_violation(probs, 0, t // 2, away_from="above")
    symmetric = all(probs[n] == probs[t - n] for n in range(t + 1))
    return OrderingReport(
        s=s.s,
        core=core,
        probs=probs,
        upper_monotone=upper is None,
        lower_monotone=lower is None,
        symmetric=symmetric,
        first_violation=upper or lower,
    )


@dataclass(frozen=True)
class CounterexampleRecord:
    n: int
    n_prime: int
    p_n: Fraction
    p_n_prime: Fraction
    violated: bool


def check_counterexample(
    s: ColumnSums | Sequence[int], r: Rect, n: int, n_prime: int
) -> CounterexampleRecord:
    """Compare ``P_n`` with ``P_{n'}`` for ``ceil(t/2) <= n <= n' <= t``.

    ``violated`` is set when the larger sample size has the larger probability.
    """
    s = as_column_sums(s)
    if not _ceil_half(s.t) <= n <= n_prime <= s.t:
        raise ValidationError(
            f"need ceil(t/2)={_ceil_half(s.t)} <= n={n} <= n'={n_prime} <= t={s.t}", "n"
        )
    p_n = event_prob_convolution(MhgSpec(n, s.s), r)
    p_n2 = event_prob_convolution(MhgSpec(n_prime, s.s), r)
    return CounterexampleRecord(n, n_prime, p_n, p_n2, p_n < p_n2)


def check_corollary(profile: ConvolutionProfile, t: int | None = None) -> dict[int, bool]:
    """``{n: w_n (t-n) >= w_{n+1} (n+1)}`` for ``ceil(t/2) <= n < t``.

    A zero ``w_{n+1}`` makes the inequality hold trivially.
    """
    if t is None:
        t = profile.t
    if t != profile.t:
        raise ValidationError(f"profile has degree {profile.t}, not {t}", "t")
    w = profile.w
    return {n: w[n] * (t - n) >= w[n + 1] * (n + 1) for n in range(_ceil_half(t), t)}


# -- sweeps ------------------------------------------------------------------


def column_sum_grid(m: int, max_s: int, min_s: int = 1, *, up_to_order: bool = True) -> Iterator[tuple[int, ...]]:
    """Column sum vectors with entries in ``[min_s, max_s]``.

    With ``up_to_order`` only non-decreasing vectors are produced; the law is
    exchangeable under relabelling categories, so that loses nothing as long
    as the constraints are swept over all orderings.
    """
    values = range(min_s, max_s + 1)
    if up_to_order:
        yield from itertools.combinations_with_replacement(values, m)
    else:
        yield from itertools.product(values, repeat=m)


def symmetric_cores(
    max_m: int = 4, max_s: int = 5, min_m: int = 2, min_s: int = 1, *, up_to_order: bool = True
) -> Iterator[SymmetricCore]:
    """Every symmetric core on the grid.

    By default each relabelling class appears once; ``up_to_order=False``
    yields every column sum vector and every core literally.
    """
    for m in range(min_m, max_m + 1):
        for s in column_sum_grid(m, max_s, min_s, up_to_order=up_to_order):
            seen = set()
            for l in itertools.product(*(range(sj // 2 + 1) for sj in s)):
                if up_to_order:
                    key = tuple(sorted(zip(s, l)))
                    if key in seen:
                        continue
                    seen.add(key)
                yield make_symmetric_core(s, l)


@dataclass
class CoreCheck:
    """Outcome of every ordering property for one core."""

    core: SymmetricCore
    upper_monotone: bool
    lower_monotone: bool
    symmetric: bool
    corollary_holds: bool
    corollary_agrees: bool
    first_violation: tuple[int, int, Fraction, Fraction] | None = None

    @property
    def ok(self) -> bool:
        return (
            self.upper_monotone
            and self.lower_monotone
            and self.symmetric
            and self.corollary_holds
            and self.corollary_agrees
        )

    def row(self) -> dict:
        return {
            "s": ",".join(map(str, self.core.s)),
            "l": ",".join(map(str, self.core.l)),
            "upper_monotone": self.upper_monotone,
            "lower_monotone": self.lower_monotone,
            "symmetric": self.symmetric,
            "corollary_holds": self.corollary_holds,
            "corollary_agrees": self.corollary_agrees,
        }


def check_core(core: SymmetricCore) -> CoreCheck:
    report = check_theorem1(core.s, core)
    profile = rect_profile(core.s, core.rect)
    corollary = check_corollary(profile)
    probs = report.probs
    # the profile inequality and the single-step probability drop must coincide
    agrees = all(holds == (probs[n] >= probs[n + 1]) for n, holds in corollary.items())
    return CoreCheck(
        core=core,
        upper_monotone=report.upper_monotone,
        lower_monotone=report.lower_monotone,
        symmetric=report.symmetric,
        corollary_holds=all(corollary.values()),
        corollary_agrees=agrees,
        first_violation=report.first_violation,
    )


@dataclass
class SweepSummary:
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def sweep_ordering(
    max_m: int = 4, max_s: int = 5, min_m: int = 2, jobs: int = 1, *, up_to_order: bool = True
) -> list[CoreCheck]:
    """Run :func:`check_core` on every symmetric core of the grid."""
    cores = symmetric_cores(max_m, max_s, min_m, up_to_order=up_to_order)
    return parallel_map(check_core, cores, jobs)


def all_rects(caps: Sequence[int]) -> Iterator[Rect]:
    """Every rect with ``0 <= l_j <= u_j <= caps[j]``."""
    intervals = [[(lo, hi) for lo in range(cap + 1) for hi in range(lo, cap + 1)] for cap in caps]
    for pairs in itertools.product(*intervals):
        yield Rect.from_pairs(pairs)


def _oracle_cell(s: tuple[int, ...]) -> SweepSummary:
    out = SweepSummary()
    t = sum(s)
    for r in all_rects(s):
        profile = rect_profile(s, r)
        for n in range(t + 1):
            spec = MhgSpec(n, s)
            fast = profile.prob(n)
            slow = event_prob_enumerate(spec, r)
            out.checked += 1
            if fast != slow:
                out.violations.append((s, str(r), n, fast, slow))
    return out


def sweep_oracle_equivalence(
    max_m: int = 3, max_s: int = 5, min_s: int = 0, jobs: int = 1, up_to_order: bool = True
) -> SweepSummary:
    """Convolution versus enumeration on every (s, rect, n) of the grid."""
    cells = [
        s
        for m in range(2, max_m + 1)
        for s in column_sum_grid(m, max_s, min_s, up_to_order=up_to_order)
    ]
    total = SweepSummary()
    for part in parallel_map(_oracle_cell, cells, jobs, chunksize=1):
        total.checked += part.checked
        total.violations.extend(part.violations)
    return total
