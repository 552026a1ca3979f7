"""Acceptance criteria. Each test records one PASS/FAIL line in the terminal summary."""
import time
from fractions import Fraction

import pytest

from rectprob.convolution import event_prob_convolution, rect_profile
from rectprob.demos import BOOKS_CORE, BOOKS_S, COUNTER_RECT, COUNTER_S
from rectprob.hypergeom import MhgSpec, event_prob_enumerate
from rectprob.ordering import check_counterexample, sweep_oracle_equivalence, sweep_ordering
from rectprob.truncmult import reduction_sweep

TOL = Fraction(5, 10**7)


def report(log, label, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}"
    log.append(line)
    print(line)
    return ok


@pytest.fixture(scope="module")
def core_sweep():
    start = time.perf_counter()
    checks = sweep_ordering(max_m=4, max_s=5, up_to_order=False)
    return checks, time.perf_counter() - start


@pytest.fixture(scope="module")
def moment_sweep():
    start = time.perf_counter()
    result = reduction_sweep(max_m=3, max_n=8, denom=8)
    return result, time.perf_counter() - start


def test_books_p26(acceptance_log):
    start = time.perf_counter()
    spec = MhgSpec(26, BOOKS_S)
    fast = event_prob_convolution(spec, BOOKS_CORE.rect)
    slow = event_prob_enumerate(spec, BOOKS_CORE.rect)
    elapsed = time.perf_counter() - start
    err = abs(fast - Fraction("0.231453"))
    ok = err < TOL and fast == slow and elapsed < 1
    detail = f"P_26={float(fast):.7f} |err|={float(err):.1e} paths_equal={fast == slow} {elapsed:.2f}s"
    assert report(acceptance_log, "1 books P_26", ok, detail)


def test_books_neighbours(acceptance_log):
    start = time.perf_counter()
    profile = rect_profile(BOOKS_S, BOOKS_CORE.rect)
    p25, p27 = profile.prob(25), profile.prob(27)
    elapsed = time.perf_counter() - start
    err = abs(p25 - Fraction("0.225406"))
    ok = p25 == p27 and err < TOL and elapsed < 1
    detail = f"P_25==P_27 {p25 == p27}, P_25={float(p25):.7f} |err|={float(err):.1e} {elapsed:.2f}s"
    assert report(acceptance_log, "2 books P_25/P_27", ok, detail)


def test_books_tail(acceptance_log):
    profile = rect_profile(BOOKS_S, BOOKS_CORE.rect)
    tail = [profile.prob(n) for n in range(40, 53)]
    ok = all(q == 0 for q in tail)
    assert report(acceptance_log, "3 books tail", ok, f"P_n == 0 for n=40..52: {ok}")


def test_counterexample(acceptance_log):
    rec = check_counterexample(COUNTER_S, COUNTER_RECT, 5, 6)
    ok = rec.p_n == Fraction(31, 42) and rec.p_n_prime == Fraction(13, 14) and rec.violated
    detail = f"P_5={rec.p_n} P_6={rec.p_n_prime} violated={rec.violated}"
    assert report(acceptance_log, "4 counterexample", ok, detail)


def test_ordering_sweep(acceptance_log, core_sweep):
    checks, elapsed = core_sweep
    bad = [c for c in checks if not (c.upper_monotone and c.lower_monotone)]
    ok = not bad and elapsed <= 300
    detail = f"{len(checks)} cores, {len(bad)} violations, {elapsed:.1f}s"
    assert report(acceptance_log, "5 ordering sweep", ok, detail)


@pytest.mark.slow
def test_oracle_equivalence(acceptance_log):
    start = time.perf_counter()
    summary = sweep_oracle_equivalence(max_m=3, max_s=5, min_s=0, up_to_order=False)
    elapsed = time.perf_counter() - start
    ok = summary.checked > 0 and not summary.violations
    detail = f"{summary.checked} (s, rect, n) cases, {len(summary.violations)} mismatches, {elapsed:.1f}s"
    assert report(acceptance_log, "6 convolution vs enumeration", ok, detail)


def test_corollary_sweep(acceptance_log, core_sweep):
    checks, _ = core_sweep
    failing = sum(not c.corollary_holds for c in checks)
    disagree = sum(not c.corollary_agrees for c in checks)
    ok = failing == 0 and disagree == 0
    detail = f"{len(checks)} cores, {failing} violations, {disagree} disagreements with the single-step drop"
    assert report(acceptance_log, "7 corollary sweep", ok, detail)


def test_symmetry(acceptance_log, core_sweep):
    checks, _ = core_sweep
    bad = sum(not c.symmetric for c in checks)
    assert report(acceptance_log, "8 symmetry", bad == 0, f"{len(checks)} cores, {bad} asymmetric")


@pytest.mark.slow
@pytest.mark.parametrize(
    "label,name",
    [
        ("9a full-rect reduction", "full_rect_zero"),
        ("9b zero-reduction example", "example_zero"),
        ("9c unit-combo reduction positive", "component_positive"),
        ("10 moment cross-validation", "cross_validation"),
    ],
)
def test_moment_sweep(acceptance_log, moment_sweep, label, name):
    result, elapsed = moment_sweep
    tally = getattr(result, name)
    ok = tally.checked > 0 and not tally.failures
    detail = f"{tally.checked} checks, {len(tally.failures)} failures (sweep {elapsed:.0f}s)"
    assert report(acceptance_log, label, ok, detail)
