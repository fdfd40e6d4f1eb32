from fractions import Fraction

import pytest
from hypothesis import given, settings

from derham import (LaurentPolynomial, ParseError, parse_polynomial,
                    render_polynomial)
from derham.textform import infer_variables
from test_poly import poly_strategy


def P(text, names=("x", "y"), divisor=()):
    return parse_polynomial(text, list(names), list(divisor))


def test_basic_expressions():
    x = LaurentPolynomial.variable(2, 0)
    y = LaurentPolynomial.variable(2, 1)
    assert P("x^2*y + y^3") == x ** 2 * y + y ** 3
    assert P("-x + 1/2") == -x + Fraction(1, 2)
    assert P("(x + y)^2") == (x + y) ** 2
    assert P("2*(x - y) - x") == x - 2 * y
    assert P("3/4*x^2") == x ** 2 * Fraction(3, 4)


def test_whitespace_insignificant():
    assert P(" x ^ 2 + y ") == P("x^2+y")


def test_negative_powers():
    p = P("x^-2*y", divisor=("x",))
    assert p.terms == {(-2, 1): Fraction(1)}
    with pytest.raises(ParseError):
        P("y^-1", divisor=("x",))
    # rational literals may carry negative powers anywhere
    assert P("2^-1*x") == P("1/2*x")


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        P("x + ")
    assert err.value.position == 4
    with pytest.raises(ParseError):
        P("x + q")
    with pytest.raises(ParseError):
        P("")
    with pytest.raises(ParseError):
        P("(x + y")
    with pytest.raises(ParseError):
        P("x ^ y")


def test_infer_variables():
    assert infer_variables("z*y + x^2 - y") == ["x", "y", "z"]
    assert infer_variables("3/4") == []


@settings(max_examples=60, deadline=None)
@given(poly_strategy())
def test_render_parse_round_trip(p):
    text = render_polynomial(p)
    assert P(text) == p


def test_render_canonical_form():
    assert render_polynomial(P("y^3 + x^2*y")) == "x^2*y + y^3"
    assert render_polynomial(P("0*x")) == "0"
    assert render_polynomial(P("-x - 1/2")) == "-x - 1/2"
    p = LaurentPolynomial(1, {(-1,): 1}, divisor={0})
    assert render_polynomial(p) == "x^-1"
    assert parse_polynomial("x^-1", ["x"], ["x"]) == p
