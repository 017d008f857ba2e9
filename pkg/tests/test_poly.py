from fractions import Fraction

import pytest

from singforms import ParseError, Ring, UnknownVariableError, parse_poly
from singforms.orders import GREVLEX, LEX, MonomialOrder


def test_three_squares(ring3):
    p = parse_poly("x^2+y^2+z^2", ring3)
    assert len(p.terms) == 3
    assert all(c == 1 for c in p.terms.values())


def test_binomial_identity(ring2):
    p = parse_poly("(x+y)^2 - x^2 - 2*x*y", ring2)
    assert p == parse_poly("y^2", ring2)


def test_two_term(ring3):
    p = parse_poly("x^2 - y^2*z", ring3)
    assert len(p.terms) == 2
    assert p.coefficient((2, 0, 0)) == 1
    assert p.coefficient((0, 2, 1)) == -1


def test_rational_literals(ring2):
    p = parse_poly("1/2*x + 3/4", ring2)
    assert p.coefficient((1, 0)) == Fraction(1, 2)
    assert p.constant_term == Fraction(3, 4)


def test_unary_minus(ring2):
    assert parse_poly("-x^2 + x^2", ring2).is_zero()
    assert parse_poly("--x", ring2) == parse_poly("x", ring2)


def test_syntax_error_position(ring2):
    with pytest.raises(ParseError) as err:
        parse_poly("x^2 + @", ring2)
    assert err.value.position == 6


def test_unknown_variable(ring2):
    with pytest.raises(UnknownVariableError) as err:
        parse_poly("x + q", ring2)
    assert err.value.name == "q"
    assert err.value.position == 4


def test_unbalanced_parenthesis(ring2):
    with pytest.raises(ParseError):
        parse_poly("(x + y", ring2)


def test_zero_denominator(ring2):
    with pytest.raises(ParseError):
        parse_poly("1/0", ring2)


def test_to_string_round_trip(ring3):
    for text in ("x^2+y^2+z^2", "x^2 - y^2*z", "-x + 2/3*y^4 - 7", "x*y*z - 1"):
        p = parse_poly(text, ring3)
        assert parse_poly(p.to_string(), ring3) == p


def test_partials(ring3):
    f = parse_poly("x^2 - y^2*z", ring3)
    assert f.partial(0) == parse_poly("2*x", ring3)
    assert f.partial(1) == parse_poly("-2*y*z", ring3)
    assert f.partial(2) == parse_poly("-y^2", ring3)


def test_homogeneity_standard(ring3):
    assert parse_poly("x^2+y^2+z^2", ring3).is_homogeneous()
    assert not parse_poly("x^2 - y^2*z", ring3).is_homogeneous()


def test_homogeneity_weighted():
    ring = Ring(("x", "y", "z"), weights=(3, 2, 2))
    assert parse_poly("x^2 - y^2*z", ring).is_homogeneous()
    assert parse_poly("x^2 - y^2*z", ring).degree() == 6


def test_pow_and_evaluate(ring2):
    p = parse_poly("x + y", ring2) ** 3
    assert p.coefficient((2, 1)) == 3
    assert p.evaluate((1, 2)) == 27


def test_grevlex_vs_lex(ring2):
    # x*y beats y^2 in lex, y^2 is the grevlex tail of x^2 + y^2
    p = parse_poly("x*y^2 + x^2", ring2)
    assert p.leading_monomial(GREVLEX) == (1, 2)
    assert p.leading_monomial(LEX) == (2, 0)


def test_weighted_order_refines_divisibility():
    order = MonomialOrder("grevlex", weights=(3, 1))
    assert order.key((1, 0)) > order.key((0, 2))
    assert order.key((1, 1)) > order.key((1, 0))


def test_ring_validation():
    with pytest.raises(ValueError):
        Ring(("x", "x"))
    with pytest.raises(ValueError):
        Ring(("x", "y"), weights=(1,))
    with pytest.raises(ValueError):
        Ring(("x", "y"), weights=(0, 1))
