from fractions import Fraction

import pytest

from conftest import urn_law
from rectprob.convolution import ConvolutionProfile, rect_profile
from rectprob.demos import BOOKS_CORE, BOOKS_S, books_table
from rectprob.errors import ValidationError
from rectprob.numeric import binomial
from rectprob.ordering import (
    check_core,
    check_corollary,
    check_counterexample,
    check_theorem1,
    scan_over_n,
    symmetric_cores,
    sweep_ordering,
)
from rectprob.simplex import Rect, make_symmetric_core, rect_contains


def urn_event(s, r, n):
    return sum((q for x, q in urn_law(s, n).items() if rect_contains(r, x)), Fraction(0))


def test_scan_matches_urn_oracle():
    s, r = (2, 3, 2), Rect((0, 1, 1), (2, 2, 1))
    assert scan_over_n(s, r) == [urn_event(s, r, n) for n in range(8)]


def test_books_scan():
    probs = books_table()
    assert len(probs) == 53
    assert abs(probs[26] - Fraction("0.231453")) < Fraction(5, 10**7)
    assert probs[25] == probs[27]
    assert abs(probs[25] - Fraction("0.225406")) < Fraction(5, 10**7)
    assert all(q == 0 for q in probs[40:])
    assert probs[39] > 0


def test_ordering_small_core():
    core = make_symmetric_core((2, 2), (1, 1))
    report = check_theorem1((2, 2), core)
    assert report.probs == [0, 0, Fraction(2, 3), 0, 0]
    assert [urn_event((2, 2), core.rect, n) for n in range(5)] == report.probs
    assert report.upper_monotone and report.lower_monotone and report.symmetric
    assert report.first_violation is None


def test_ordering_uneven_core():
    core = make_symmetric_core((2, 2), (0, 1))
    report = check_theorem1((2, 2), core)
    assert report.probs[2] == urn_event((2, 2), core.rect, 2) == Fraction(2, 3)
    assert report.probs[3] == urn_event((2, 2), core.rect, 3) == Fraction(1, 2)
    assert report.ok


def test_ordering_books():
    report = check_theorem1(BOOKS_S, BOOKS_CORE)
    assert report.ok
    d = report.to_dict()
    assert d["probs"][26]["prob_decimal"] == "0.231453"
    assert len(d["probs"]) == 53


def test_ordering_requires_matching_core():
    core = make_symmetric_core((2, 2), (1, 1))
    with pytest.raises(ValidationError):
        check_theorem1((2, 4), core)
    with pytest.raises(ValidationError):
        check_theorem1((4, 6), Rect((0, 3), (3, 6)))


def test_counterexample():
    rec = check_counterexample((4, 6), Rect((0, 3), (3, 6)), 5, 6)
    assert (rec.p_n, rec.p_n_prime, rec.violated) == (Fraction(31, 42), Fraction(13, 14), True)
    core = make_symmetric_core((4, 6), (1, 2))
    rec = check_counterexample((4, 6), core.rect, 5, 6)
    assert rec.p_n == urn_event((4, 6), core.rect, 5)
    assert rec.p_n_prime == urn_event((4, 6), core.rect, 6)
    assert not rec.violated
    assert not check_counterexample((4, 6), Rect((0, 3), (3, 6)), 7, 7).violated
    with pytest.raises(ValidationError):
        check_counterexample((4, 6), Rect((0, 3), (3, 6)), 4, 6)
    with pytest.raises(ValidationError):
        check_counterexample((4, 6), Rect((0, 3), (3, 6)), 6, 11)


def test_corollary_examples():
    t = 12
    flat = ConvolutionProfile(t, tuple(binomial(t, n) for n in range(t + 1)))
    res = check_corollary(flat)
    assert list(res) == list(range(6, 12))
    # equality for the untruncated binomial: C(t,n)(t-n) == C(t,n+1)(n+1)
    assert all(flat.w[n] * (t - n) == flat.w[n + 1] * (n + 1) for n in res)
    assert all(res.values())

    books = rect_profile(BOOKS_S, BOOKS_CORE.rect)
    assert check_corollary(books, 52)[26]

    tiny = rect_profile((2, 2), make_symmetric_core((2, 2), (1, 1)).rect)
    assert tiny.w == (0, 0, 4, 0, 0)
    assert check_corollary(tiny) == {2: True, 3: True}
    with pytest.raises(ValidationError):
        check_corollary(tiny, 5)


def test_corollary_detects_a_steep_profile():
    # n=2: 2*2 < 3*3 fails; n=3: 3*1 >= 0*4 holds
    assert check_corollary(ConvolutionProfile(4, (1, 1, 2, 3, 0))) == {2: False, 3: True}


def test_core_enumeration_covers_relabellings():
    cores = list(symmetric_cores(max_m=2, max_s=2))
    keys = {(c.s, c.l) for c in cores}
    assert ((1, 2), (0, 1)) in keys
    assert ((2, 2), (0, 1)) in keys and ((2, 2), (1, 0)) not in keys


def test_sweep_small_grid_parallel_matches_serial():
    serial = sweep_ordering(max_m=3, max_s=4)
    parallel = sweep_ordering(max_m=3, max_s=4, jobs=2)
    assert [c.row() for c in serial] == [c.row() for c in parallel]
    assert all(c.ok for c in serial)


def test_check_core_corollary_agreement():
    check = check_core(make_symmetric_core((3, 5, 4), (1, 2, 1)))
    assert check.ok


def test_literal_core_grid():
    cores = list(symmetric_cores(max_m=2, max_s=2, up_to_order=False))
    # s in {1,2}^2; s_j=1 allows l_j=0, s_j=2 allows l_j in {0,1}
    assert len(cores) == 9
    assert {(c.s, c.l) for c in cores} >= {((2, 2), (0, 1)), ((2, 2), (1, 0))}
