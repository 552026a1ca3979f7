import itertools

import pytest

from rectprob.errors import ValidationError
from rectprob.numeric import binomial
from rectprob.simplex import (
    Rect,
    enumerate_simplex,
    make_symmetric_core,
    parse_core,
    parse_rect,
    rect_contains,
)


def brute_simplex(m, n):
    return sorted(x for x in itertools.product(range(n + 1), repeat=m) if sum(x) == n)


def test_enumerate_examples():
    assert list(enumerate_simplex(1, 5)) == [(5,)]
    assert list(enumerate_simplex(2, 5)) == [(k, 5 - k) for k in range(6)]
    assert len(list(enumerate_simplex(3, 2))) == binomial(4, 2) == 6


def test_enumerate_rejects_zero_categories():
    with pytest.raises(ValidationError):
        list(enumerate_simplex(0, 3))


@pytest.mark.parametrize("m", range(1, 6))
def test_enumerate_count_order_and_uniqueness(m):
    for n in range(13):
        got = list(enumerate_simplex(m, n))
        assert len(got) == binomial(n + m - 1, m - 1)
        assert got == sorted(set(got))
        if m <= 3 and n <= 8:
            assert got == brute_simplex(m, n)


def test_bounded_enumeration_equals_filtering():
    for m in (2, 3):
        for n in range(7):
            full = list(enumerate_simplex(m, n))
            for lo in itertools.product(range(4), repeat=m):
                for width in itertools.product(range(4), repeat=m):
                    hi = [a + w for a, w in zip(lo, width)]
                    want = [x for x in full if all(a <= v <= b for a, v, b in zip(lo, x, hi))]
                    assert list(enumerate_simplex(m, n, lo, hi)) == want


def test_rect_contains():
    r = Rect((0, 3), (3, 6))
    assert rect_contains(r, (2, 3))
    assert not rect_contains(r, (4, 1))
    full = Rect.full((4, 6))
    assert all(rect_contains(full, x) for x in enumerate_simplex(2, 5) if x[0] <= 4)
    with pytest.raises(ValidationError):
        rect_contains(r, (1, 2, 3))


def test_rect_validation():
    with pytest.raises(ValidationError):
        Rect((2,), (1,))
    with pytest.raises(ValidationError):
        Rect((0, 1), (1,))
    with pytest.raises(ValidationError):
        Rect((-1,), (1,))
    # upper bounds beyond any column sum are allowed at construction
    assert Rect((0,), (100,)).u == (100,)


def test_make_symmetric_core_examples():
    books = make_symmetric_core((4,) * 13, (1,) * 13)
    assert books.rect.pairs() == [(1, 3)] * 13
    assert make_symmetric_core((4, 6), (0, 0)).u == (4, 6)
    assert make_symmetric_core((2, 2), (1, 1)).rect.pairs() == [(1, 1), (1, 1)]
    with pytest.raises(ValidationError):
        make_symmetric_core((4, 3), (0, 2))


def test_symmetric_core_closed_under_reflection():
    for s in itertools.product(range(5), repeat=3):
        for l in itertools.product(*(range(sj // 2 + 1) for sj in s)):
            core = make_symmetric_core(s, l)
            for x in itertools.product(*(range(sj + 1) for sj in s)):
                mirror = tuple(sj - xj for sj, xj in zip(s, x))
                assert rect_contains(core.rect, x) == rect_contains(core.rect, mirror)


def test_parse_rect_and_core():
    assert parse_rect("0:3,3:6") == Rect((0, 3), (3, 6))
    assert parse_rect("1,2:4") == Rect((1, 2), (1, 4))
    assert str(parse_rect("0:3,3:6")) == "0:3,3:6"
    core = parse_core("s=4,6;l=1,2")
    assert core.u == (3, 4)
    assert str(core) == "s=4,6;l=1,2"
    for bad in ("a:3", "1:2:3", "3:1", ""):
        with pytest.raises(ValidationError) as err:
            parse_rect(bad)
        assert err.value.parameter == "rect"
    for bad in ("s=4,4", "s=4,4;l=3,1", "s=4;l=x", "q=1;l=1"):
        with pytest.raises(ValidationError):
            parse_core(bad)
