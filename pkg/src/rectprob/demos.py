"""Two worked examples used by the CLI ``demo`` command and the tutorials."""
from __future__ import annotations

from fractions import Fraction

from .ordering import CounterexampleRecord, check_counterexample, scan_over_n
from .simplex import Rect, SymmetricCore, make_symmetric_core

# A shuffled deck dealt into two hands: 13 ranks of 4 cards. A hand of n cards
# holds no "book" (all four of a rank) and neither does the other hand exactly
# when every rank count lies in {1, 2, 3}.
BOOKS_S = (4,) * 13
BOOKS_CORE: SymmetricCore = make_symmetric_core(BOOKS_S, (1,) * 13)

COUNTER_S = (4, 6)
COUNTER_RECT = Rect((0, 3), (3, 6))


def books_table() -> list[Fraction]:
    """P(no book in either hand) when one hand gets n of the 52 cards, n = 0..52."""
    return scan_over_n(BOOKS_S, BOOKS_CORE.rect)


def counterexample() -> CounterexampleRecord:
    """An asymmetric rect whose probability grows from n = 5 to n = 6."""
    return check_counterexample(COUNTER_S, COUNTER_RECT, 5, 6)
