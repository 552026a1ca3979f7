import itertools
from collections import Counter
from fractions import Fraction

import pytest

ACCEPTANCE_LINES: list[str] = []


def urn_law(s, n):
    """Oracle: draw every n-subset of labelled balls and tally colour counts."""
    balls = [j for j, sj in enumerate(s) for _ in range(sj)]
    counts = Counter()
    total = 0
    for draw in itertools.combinations(range(len(balls)), n):
        x = [0] * len(s)
        for b in draw:
            x[balls[b]] += 1
        counts[tuple(x)] += 1
        total += 1
    return {x: Fraction(c, total) for x, c in counts.items()}


def sequence_law(p, n):
    """Oracle: the multinomial law from all m^n ordered draw sequences."""
    m = len(p)
    law = Counter()
    for seq in itertools.product(range(m), repeat=n):
        w = Fraction(1)
        for j in seq:
            w *= p[j]
        x = tuple(seq.count(j) for j in range(m))
        law[x] += w
    return law


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
