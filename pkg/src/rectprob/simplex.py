"""Discrete simplex, rectangular events and symmetric cores.

A rectangular event is a box ``{l_1..u_1} x ... x {l_m..u_m}`` intersected
with the simplex of non-negative integer vectors summing to ``n``. A
symmetric core is a box whose intervals are centred on ``s_j / 2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ValidationError

FrequencyVector = tuple[int, ...]


@dataclass(frozen=True)
class Rect:
    """Per-coordinate closed integer intervals ``[l_j, u_j]``.

    Upper bounds may exceed any column sum or sample size; they are clamped
    only when the rect is paired with a distribution.
    """

    l: tuple[int, ...]
    u: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "l", tuple(int(v) for v in self.l))
        object.__setattr__(self, "u", tuple(int(v) for v in self.u))
        if len(self.l) != len(self.u):
            raise ValidationError("l and u differ in length", "rect")
        if not self.l:
            raise ValidationError("rect needs at least one coordinate", "rect")
        for j, (lo, hi) in enumerate(zip(self.l, self.u)):
            if lo < 0:
                raise ValidationError(f"negative lower bound in coordinate {j + 1}", "rect")
            if lo > hi:
                raise ValidationError(f"l > u in coordinate {j + 1}", "rect")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]]) -> "Rect":
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    @classmethod
    def full(cls, caps: Sequence[int]) -> "Rect":
        """The unconstrained box ``[0, cap_j]`` in every coordinate."""
        return cls((0,) * len(caps), tuple(caps))

    @property
    def m(self) -> int:
        return len(self.l)

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.l, self.u))

    def clamped(self, caps: Sequence[int]) -> list[tuple[int, int]]:
        """Bounds intersected with ``[0, cap_j]``; an empty interval has lo > hi."""
        if len(caps) != self.m:
            raise ValidationError(f"rect has {self.m} coordinates, expected {len(caps)}", "rect")
        return [(lo, min(hi, cap)) for lo, hi, cap in zip(self.l, self.u, caps)]

    def __str__(self) -> str:
        return ",".join(f"{lo}:{hi}" for lo, hi in zip(self.l, self.u))


@dataclass(frozen=True)
class SymmetricCore:
    """A rect with ``l_j + u_j = s_j`` for the column sums ``s`` it belongs to."""

    rect: Rect
    s: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(int(v) for v in self.s))
        if len(self.s) != self.rect.m:
            raise ValidationError("core and column sums differ in length", "core")
        for j, (lo, hi, sj) in enumerate(zip(self.rect.l, self.rect.u, self.s)):
            if lo + hi != sj or hi > sj:
                raise ValidationError(
                    f"interval {lo}:{hi} is not centred on s_{j + 1}/2 = {sj}/2", "core"
                )

    @property
    def l(self) -> tuple[int, ...]:
        return self.rect.l

    @property
    def u(self) -> tuple[int, ...]:
        return self.rect.u

    def __str__(self) -> str:
        return f"s={','.join(map(str, self.s))};l={','.join(map(str, self.l))}"


def enumerate_simplex(
    m: int,
    n: int,
    lower: Sequence[int] | None = None,
    upper: Sequence[int] | None = None,
) -> Iterator[FrequencyVector]:
    """Yield every ``x`` with ``m`` non-negative parts summing to ``n``.

    Vectors come in lexicographic order, so ``(0, ..., n)`` first and
    ``(n, 0, ..., 0)`` last. Optional per-coordinate ``lower``/``upper``
    bounds prune the walk to the vectors inside that box; the result equals
    filtering the full stream but visits no dead branches.
    """
    if m < 1:
        raise ValidationError(f"need at least one category, got m={m}", "m")
    if n < 0:
        return
    lo = [0] * m if lower is None else [max(0, int(v)) for v in lower]
    hi = [n] * m if upper is None else [min(n, int(v)) for v in upper]
    if len(lo) != m or len(hi) != m:
        raise ValidationError("bound vectors must have m entries", "rect")
    # suffix sums of the bounds bound what the remaining coordinates can absorb
    lo_tail = [0] * (m + 1)
    hi_tail = [0] * (m + 1)
    for j in range(m - 1, -1, -1):
        lo_tail[j] = lo_tail[j + 1] + lo[j]
        hi_tail[j] = hi_tail[j + 1] + hi[j]
    if not lo_tail[0] <= n <= hi_tail[0]:
        return

    x = [0] * m

    def walk(j: int, remaining: int) -> Iterator[FrequencyVector]:
        if j == m - 1:
            x[j] = remaining
            yield tuple(x)
            return
        first = max(lo[j], remaining - hi_tail[j + 1])
        last = min(hi[j], remaining - lo_tail[j + 1])
        for v in range(first, last + 1):
            x[j] = v
            yield from walk(j + 1, remaining - v)

    yield from walk(0, n)


def rect_contains(r: Rect, x: Sequence[int]) -> bool:
    if len(x) != r.m:
        raise ValidationError(f"vector has {len(x)} components, rect has {r.m}", "x")
    return all(lo <= xj <= hi for lo, hi, xj in zip(r.l, r.u, x))


def make_symmetric_core(s: Sequence[int], l: Sequence[int]) -> SymmetricCore:
    """The core with lower bounds ``l`` and upper bounds ``s - l``."""
    s = tuple(int(v) for v in s)
    l = tuple(int(v) for v in l)
    if len(s) != len(l):
        raise ValidationError("s and l differ in length", "core")
    for j, (sj, lj) in enumerate(zip(s, l)):
        if sj < 0:
            raise ValidationError(f"negative column sum s_{j + 1}", "s")
        if lj < 0 or 2 * lj > sj:
            raise ValidationError(f"l_{j + 1}={lj} must lie in [0, s_{j + 1}/2]", "core")
    u = tuple(sj - lj for sj, lj in zip(s, l))
    return SymmetricCore(Rect(l, u), s)


def _int_list(text: str, parameter: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise ValidationError(f"expected comma-separated integers, got {text!r}", parameter) from None


def parse_rect(text: str) -> Rect:
    """Parse ``"l1:u1,l2:u2,..."``; a bare ``k`` means ``k:k``."""
    pairs = []
    for item in text.strip().split(","):
        parts = item.strip().split(":")
        try:
            if len(parts) == 1:
                lo = hi = int(parts[0])
            elif len(parts) == 2:
                lo, hi = int(parts[0]), int(parts[1])
            else:
                raise ValueError
        except ValueError:
            raise ValidationError(f"malformed interval {item!r}", "rect") from None
        pairs.append((lo, hi))
    return Rect.from_pairs(pairs)


def parse_core(text: str) -> SymmetricCore:
    """Parse ``"s=4,4,4;l=1,1,1"``."""
    fields = {}
    for part in text.strip().split(";"):
        key, sep, value = part.partition("=")
        if not sep or key.strip() not in ("s", "l"):
            raise ValidationError(f"malformed core component {part!r}", "core")
        fields[key.strip()] = value
    if set(fields) != {"s", "l"}:
        raise ValidationError("core needs both s=... and l=...", "core")
    return make_symmetric_core(_int_list(fields["s"], "core"), _int_list(fields["l"], "core"))
