"""Representation counters: raw enumeration vs the closed product route."""

from math import gcd

import pytest

from sigmaprime.arith import sigma_k, totient
from sigmaprime.lattice import brute_convolution, sigma_prime
from sigmaprime.representations import (
    BudgetExceededError,
    CountSpec,
    count_fast,
    count_raw,
    verify_lm,
)


def test_count_examples():
    assert count_fast(CountSpec("L", 1, 1, 3)) == 6
    assert count_raw(CountSpec("L", 1, 1, 3)) == 6
    assert count_fast(CountSpec("Lprime", 1, 1, 2)) == 1
    assert count_raw(CountSpec("Lprime", 1, 1, 2)) == 1
    assert count_fast(CountSpec("Mprime", 3, 3, 3)) == 18
    assert count_raw(CountSpec("Mprime", 3, 3, 3)) == 18
    assert count_fast(CountSpec("L", 2, 1, 2)) == 1
    assert count_raw(CountSpec("L", 2, 1, 2)) == 1


def test_split_count_identities():
    # the raw loops lean on two elementary counts: an integer A has exactly
    # A ordered splits A = a + c with a >= 0, c > 0, and exactly phi(A)
    # of them with gcd(a, c) = 1 (convention gcd(0, c) = c)
    for upper in (1, 2, 3, 17, 100, 200):
        splits = sum(1 for a in range(upper) for c in (upper - a,) if c > 0)
        assert splits == upper
        coprime = sum(1 for a in range(upper) if gcd(a, upper - a) == 1)
        assert coprime == totient(upper)


def test_raw_matches_fast_small_grid():
    for r, s in ((1, 1), (1, 2), (2, 2)):
        for n in range(2, 11):
            for which in ("L", "M", "Lprime", "Mprime"):
                spec = CountSpec(which, r, s, n)
                assert count_raw(spec) == count_fast(spec), (which, r, s, n)


def test_fast_equals_convolutions():
    for r, s in ((1, 1), (1, 3), (2, 2)):
        for n in range(2, 40):
            expected = sum(sigma_k(r, m) * sigma_k(s, n - m) for m in range(1, n))
            assert count_fast(CountSpec("L", r, s, n)) == expected
            assert count_fast(CountSpec("M", r, s, n)) == expected
            coprime = sum(sigma_prime(r, s, m, n - m) for m in range(1, n))
            assert count_fast(CountSpec("Lprime", r, s, n)) == coprime
            assert count_fast(CountSpec("Mprime", r, s, n)) == coprime
            assert count_fast(CountSpec("Lprime", r, s, n)) == brute_convolution(r, s, n, "Bprime")


def test_verify_lm_report():
    report = verify_lm(1, 1, 2, 10)
    assert report.all_pass
    assert not report.skipped_any
    assert len(report.rows) == 9
    report = verify_lm(2, 3, 2, 8)
    assert report.all_pass


def test_verify_lm_budget_skips_raw_but_keeps_fast_checks():
    report = verify_lm(1, 1, 2, 20, budget=1)
    assert report.all_pass
    assert report.skipped_any
    for row in report.rows:
        assert row.skipped  # every raw route exceeds a budget of 1


def test_budget_error():
    spec = CountSpec("M", 3, 3, 12)
    with pytest.raises(BudgetExceededError) as info:
        count_raw(spec, budget=1000)
    assert "budget" in str(info.value)
    # generous budget succeeds and agrees with the product route
    assert count_raw(spec, budget=10**7) == count_fast(spec)


def test_count_spec_validation():
    with pytest.raises(ValueError):
        CountSpec("K", 1, 1, 5)
    with pytest.raises(ValueError):
        CountSpec("L", 0, 1, 5)
    with pytest.raises(ValueError):
        CountSpec("L", 1, -2, 5)
    with pytest.raises(ValueError):
        CountSpec("L", 1, 1, 1)
    assert CountSpec("Mprime", 1, 1, 5).solution_set == "Bprime"
    assert CountSpec("M", 1, 1, 5).solution_set == "B"
