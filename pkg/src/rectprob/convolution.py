"""Rectangular event probabilities through truncated binomial convolution.

Let ``Y_j ~ Bin(s_j, 1/2)`` be independent and ``W_j`` be ``Y_j`` restricted
to ``{l_j..u_j}``. Then for ``X ~ H_m(n; s)``::

    P[X in R] = P[W = n] * prod_j P[Y_j in R_j] / P[Y = n]

The powers of two and the normalizers ``P[Y_j in R_j]`` cancel, leaving the
integer identity ``P[X in R] = w_n / C(t, n)`` where ``w`` is the product of
the polynomials ``sum_{k in R_j} C(s_j, k) z^k``. One convolution serves
every ``n`` at once.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ValidationError
from .hypergeom import ColumnSums, MhgSpec, as_column_sums
from .numeric import binomial, binomial_row
from .simplex import Rect


@dataclass(frozen=True)
class TruncatedCoefficientVector:
    """``coeffs[k] = C(s, k)`` for ``k`` in ``[lower, upper]``, zero elsewhere."""

    s: int
    lower: int
    upper: int
    coeffs: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.coeffs)


@dataclass(frozen=True)
class ConvolutionProfile:
    """Coefficients ``w_0..w_t`` of the product polynomial."""

    t: int
    w: tuple[int, ...]

    def __post_init__(self):
        if len(self.w) != self.t + 1:
            raise ValidationError(f"profile needs t+1={self.t + 1} entries, got {len(self.w)}")

    def __getitem__(self, n: int) -> int:
        if 0 <= n <= self.t:
            return self.w[n]
        return 0

    def prob(self, n: int) -> Fraction:
        """``w_n / C(t, n)``."""
        if not 0 <= n <= self.t:
            raise ValidationError(f"sample size {n} outside [0, t={self.t}]", "n")
        return Fraction(self.w[n], binomial(self.t, n))

    def to_json(self) -> str:
        return json.dumps([str(v) for v in self.w])

    @classmethod
    def from_json(cls, text: str) -> "ConvolutionProfile":
        w = tuple(int(v) for v in json.loads(text))
        return cls(len(w) - 1, w)


def truncated_binomial_coeffs(s: int, lower: int, upper: int) -> TruncatedCoefficientVector:
    """Row ``s`` of Pascal's triangle with entries outside ``[lower, upper]`` zeroed.

    The interval is clamped to ``[0, s]``; if nothing is left the vector is all
    zero, which makes every event through this coordinate impossible.
    """
    if lower < 0 or lower > upper:
        raise ValidationError(f"bad interval {lower}:{upper}", "rect")
    row = binomial_row(s)
    coeffs = tuple(c if lower <= k <= upper else 0 for k, c in enumerate(row))
    return TruncatedCoefficientVector(s, lower, upper, coeffs)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Schoolbook product of two coefficient sequences."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for k, bk in enumerate(b):
                out[i + k] += ai * bk
    return out


def convolve(vs: Iterable[TruncatedCoefficientVector]) -> ConvolutionProfile:
    """Multiply the coefficient polynomials pairwise in a balanced tree."""
    layer = [list(v.coeffs) for v in vs]
    if not layer:
        raise ValidationError("need at least one coefficient vector")
    while len(layer) > 1:
        nxt = [poly_mul(layer[i], layer[i + 1]) for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    w = tuple(layer[0])
    return ConvolutionProfile(len(w) - 1, w)


def rect_profile(s: ColumnSums | Sequence[int], r: Rect) -> ConvolutionProfile:
    s = as_column_sums(s)
    if r.m != s.m:
        raise ValidationError(f"rect has {r.m} coordinates, expected {s.m}", "rect")
    return convolve(truncated_binomial_coeffs(sj, lo, hi) for sj, (lo, hi) in zip(s, r.pairs()))


def event_prob_convolution(spec: MhgSpec, r: Rect) -> Fraction:
    """P[X in R(l, u)] for ``X ~ H_m(n; s)`` as ``w_n / C(t, n)``."""
    return rect_profile(spec.s, r).prob(spec.n)


def lemma_form(spec: MhgSpec, r: Rect) -> Fraction:
    """The same probability assembled from binomial(1/2) probabilities.

    Evaluates ``P[W = n] * prod_j P[Y_j in R_j] / P[Y = n]`` literally, with
    ``W`` normalized as a convolution of truncated laws. Slower than
    :func:`event_prob_convolution`; kept to check the cancellation.
    """
    vecs = [truncated_binomial_coeffs(sj, lo, hi) for sj, (lo, hi) in zip(spec.s, r.pairs())]
    mass = [Fraction(v.total, 2**v.s) for v in vecs]
    if any(q == 0 for q in mass):
        return Fraction(0)
    law = [Fraction(1)]
    for v, q in zip(vecs, mass):
        law = poly_mul(law, [Fraction(c, 2**v.s) / q for c in v.coeffs])
    p_w = law[spec.n] if spec.n < len(law) else Fraction(0)
    p_y = Fraction(binomial(spec.t, spec.n), 2**spec.t)
    out = p_w / p_y
    for q in mass:
        out *= q
    return out
