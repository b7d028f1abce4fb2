from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from moorezeta.homotopy import HomotopyPattern, homotopy_order, leopoldt_sequence, periodicity_witness

PRIMES = [3, 5, 7, 11, 13, 101]


def test_known_orders_at_three():
    assert [homotopy_order(3, n) for n in range(-1, 9)] == [3, 3, 1, 1, 3, 3, 1, 1, 3, 3]
    assert homotopy_order(3, 4) == 3


def test_pattern_degrees():
    pat = HomotopyPattern(5)
    assert pat.period == 8
    assert pat.alpha1_degree == 7
    assert pat.v1_degree == 8
    assert pat.nontrivial_degrees(0, 17) == [0, 7, 8, 15, 16]


@given(st.sampled_from(PRIMES), st.integers(-500, 500), st.integers(1, 6))
def test_periodicity(p, n, steps):
    assert periodicity_witness(p, n, steps)
    assert homotopy_order(p, n) in (1, p)


@given(st.sampled_from(PRIMES), st.integers(1, 200))
def test_pairs_of_degrees(p, n):
    # pi_2n and pi_{2n-1} are nontrivial together, exactly when (p-1) | n
    a, b = homotopy_order(p, 2 * n), homotopy_order(p, 2 * n - 1)
    assert a == b == (p if n % (p - 1) == 0 else 1)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_leopoldt_sequence(p):
    assert leopoldt_sequence(p, 4) == [p] * 5


def test_rejects_two_and_composites():
    for bad in (2, 4, 9, 1):
        with pytest.raises(ValueError):
            HomotopyPattern(bad)
