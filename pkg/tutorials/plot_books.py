"""
No books in either hand
-----------------------

Deal n cards of a 52-card deck to one player and the rest to another.
A "book" is all four cards of one rank. Neither hand holds a book exactly
when every rank count in the first hand lies in {1, 2, 3}.

The rank counts follow a multiple hypergeometric law with 13 colours of
4 balls each, and the event is a symmetric core.
"""

from rectprob import MhgSpec, event_prob_convolution, event_prob_enumerate, format_decimal
from rectprob.demos import BOOKS_CORE, BOOKS_S, books_table

###############################################################################
# The even split. Both routes give the same rational.

spec = MhgSpec(26, BOOKS_S)
fast = event_prob_convolution(spec, BOOKS_CORE.rect)
print("P_26 =", format_decimal(fast), fast == event_prob_enumerate(spec, BOOKS_CORE.rect))

###############################################################################
# One profile serves every n. The table peaks at 26 and is mirrored about it.

probs = books_table()
for n in (20, 24, 25, 26, 27, 28, 32, 39, 40):
    print(f"n={n:2d}  {format_decimal(probs[n])}")

# with more than 39 cards some rank must appear four times
assert all(q == 0 for q in probs[40:])
