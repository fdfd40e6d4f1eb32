import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derham import (LaurentPolynomial, MonomialOrder, RingError, gradient,
                    partial_derivative, weighted_degree,
                    find_quasi_homogeneous_weights)
from conftest import random_polynomial


def poly_strategy(nvars=2, max_degree=4):
    coeff = st.fractions(
        min_value=-10, max_value=10, max_denominator=7)
    exps = st.tuples(*[st.integers(0, max_degree)] * nvars)
    return st.dictionaries(exps, coeff, max_size=5).map(
        lambda d: LaurentPolynomial(nvars, d))


@settings(max_examples=60, deadline=None)
@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p + LaurentPolynomial.zero(2) == p
    assert p * LaurentPolynomial.constant(2, 1) == p
    assert p - p == LaurentPolynomial.zero(2)


@settings(max_examples=40, deadline=None)
@given(poly_strategy(nvars=3), poly_strategy(nvars=3))
def test_derivative_is_linear_leibniz(p, q):
    for i in range(3):
        assert (partial_derivative(p + q, i)
                == partial_derivative(p, i) + partial_derivative(q, i))
        assert (partial_derivative(p * q, i)
                == partial_derivative(p, i) * q + p * partial_derivative(q, i))


@settings(max_examples=40, deadline=None)
@given(poly_strategy(nvars=3))
def test_mixed_partials_commute(p):
    for i in range(3):
        for j in range(i + 1, 3):
            assert (partial_derivative(partial_derivative(p, i), j)
                    == partial_derivative(partial_derivative(p, j), i))


def test_float_coefficients_rejected():
    with pytest.raises(RingError):
        LaurentPolynomial(1, {(1,): 0.5})
    with pytest.raises(RingError):
        LaurentPolynomial.variable(2, 0) * 0.5


def test_negative_exponents_need_divisor():
    p = LaurentPolynomial(2, {(-1, 0): 1}, divisor={0})
    assert p.terms == {(-1, 0): Fraction(1)}
    with pytest.raises(RingError):
        LaurentPolynomial(2, {(0, -1): 1}, divisor={0})


def test_context_mixing_raises():
    a = LaurentPolynomial.variable(2, 0)
    b = LaurentPolynomial.variable(2, 0, divisor={0})
    c = LaurentPolynomial.variable(3, 0)
    with pytest.raises(RingError):
        a + b
    with pytest.raises(RingError):
        a * c


def test_power_matches_repeated_product(rng):
    for _ in range(10):
        p = random_polynomial(rng, 2)
        expect = LaurentPolynomial.constant(2, 1)
        for k in range(5):
            assert p ** k == expect
            expect = expect * p


def test_monomial_order_keys():
    deg = MonomialOrder()
    # degrevlex on x, y: x^2 > xy > y^2 > x > y > 1
    chain = [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)]
    keys = [deg.key(e) for e in chain]
    assert keys == sorted(keys, reverse=True)
    lex = MonomialOrder(MonomialOrder.LEX)
    assert lex.key((1, 0)) > lex.key((0, 5))
    weighted = MonomialOrder(MonomialOrder.WEIGHTED, weights=(1, 3))
    assert weighted.key((0, 1)) > weighted.key((2, 0))


def test_weighted_degree_and_homogeneity():
    x = LaurentPolynomial.variable(2, 0)
    y = LaurentPolynomial.variable(2, 1)
    f = x ** 3 + y ** 4
    assert weighted_degree(f, (4, 3)) == (12, True)
    assert weighted_degree(f + x, (4, 3)) == (12, False)
    with pytest.raises(RingError):
        weighted_degree(LaurentPolynomial.zero(2), (1, 1))


@pytest.mark.parametrize("terms,expected", [
    ({(3, 0): 1, (0, 4): 1}, (4, 3)),          # x^3 + y^4
    ({(3, 0): 1, (1, 3): 1}, (3, 2)),          # x^3 + x*y^3
    ({(2, 1): 1, (0, 3): 1}, (1, 1)),          # x^2 y + y^3
    ({(3, 0): 1, (1, 0): -3}, None),           # x^3 - 3x
])
def test_quasi_homogeneous_weights(terms, expected):
    p = LaurentPolynomial(2, terms)
    w = find_quasi_homogeneous_weights(p)
    assert w == expected
    if w is not None:
        assert weighted_degree(p, w)[1]


def test_gradient_length():
    f = LaurentPolynomial.variable(3, 0) ** 2
    g = gradient(f)
    assert len(g) == 3
    assert g[1].is_zero() and g[2].is_zero()
