from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from moorezeta.arith import (
    Cyclotomic,
    cyc_add,
    cyc_inverse,
    cyc_mul,
    cyc_neg,
    cyclotomic_polynomial,
    euler_phi,
    field_norm,
    galois_conj,
    lambda_valuation,
    padic_valuation,
    reduce_mod_lambda,
)

ORDERS = [1, 3, 4, 5, 7, 9, 12, 25]

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def elements(draw, order=None):
    m = draw(st.sampled_from(ORDERS)) if order is None else order
    coeffs = draw(st.lists(small, min_size=euler_phi(m), max_size=euler_phi(m)))
    return Cyclotomic(m, coeffs)


@st.composite
def pairs(draw):
    m = draw(st.sampled_from(ORDERS))
    return draw(elements(m)), draw(elements(m)), draw(elements(m))


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    for m in range(1, 40):
        assert len(cyclotomic_polynomial(m)) == euler_phi(m) + 1


def test_zeta_relations():
    z = Cyclotomic.zeta(5)
    assert z**5 == 1
    assert 1 + z + z**2 + z**3 + z**4 == 0
    assert Cyclotomic.zeta(9, 3) == Cyclotomic.zeta(3)
    assert Cyclotomic.zeta(6) == -Cyclotomic.zeta(3, 2)


def test_complex_embedding():
    z = Cyclotomic.zeta(7, 3)
    assert abs(z.to_complex() - complex(math.cos(6 * math.pi / 7), math.sin(6 * math.pi / 7))) < 1e-14


@given(pairs())
def test_field_axioms(abc):
    a, b, c = abc
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert cyc_add(a, cyc_neg(a)).is_zero()
    if not a.is_zero():
        assert cyc_mul(a, cyc_inverse(a)) == 1


@given(pairs())
def test_norm_multiplicative(abc):
    a, b, _ = abc
    assert field_norm(a * b) == field_norm(a) * field_norm(b)


@given(elements(), st.integers(1, 60))
def test_galois_is_ring_map(a, sigma):
    m = a.order
    if math.gcd(sigma, m) != 1:
        return
    b = a * a + 1
    assert galois_conj(b, sigma) == galois_conj(a, sigma) ** 2 + 1
    assert galois_conj(galois_conj(a, sigma), pow(sigma, -1, m)) == a


@given(elements())
def test_complex_embedding_is_homomorphism(a):
    b = a * a
    assert abs(b.to_complex() - a.to_complex() ** 2) < 1e-6 * (1 + abs(b.to_complex()))


def test_norm_of_one_minus_zeta():
    for p in (3, 5, 7, 11):
        assert (1 - Cyclotomic.zeta(p)).norm() == p
    assert (1 - Cyclotomic.zeta(9)).norm() == 3


def test_equality_across_orders():
    a = Cyclotomic.zeta(3) + 2
    assert a == a.embed(9)
    assert hash(a) == hash(a.embed(9))
    assert Cyclotomic.rational(Fraction(1, 2), 5) == Fraction(1, 2)
    with pytest.raises(ValueError):
        Cyclotomic.zeta(3) + Cyclotomic.zeta(5)


def test_immutability():
    a = Cyclotomic.zeta(3)
    with pytest.raises(AttributeError):
        a.order = 5


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.rational(0, 3).inverse()


def test_padic_valuation():
    assert padic_valuation(Fraction(18, 5), 3) == 2
    assert padic_valuation(Fraction(5, 27), 3) == -3
    assert padic_valuation(0, 3) == math.inf


def test_lambda_valuation():
    z = Cyclotomic.zeta(5)
    assert lambda_valuation(1 - z, 5) == 1
    assert lambda_valuation((1 - z) ** 3, 5) == 3
    assert lambda_valuation(5, 5) == 4
    assert lambda_valuation(1 + z, 5) == 0
    assert reduce_mod_lambda(1 + z, 5) == 2
    assert reduce_mod_lambda(Fraction(1, 2), 5) == 3


@given(elements(order=7))
def test_lambda_valuation_matches_norm(a):
    if a.is_zero() or any(c.denominator % 7 == 0 for c in a.coeffs):
        return
    assert lambda_valuation(a, 7) == padic_valuation(a.norm(), 7)
