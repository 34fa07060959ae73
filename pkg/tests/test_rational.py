from fractions import Fraction

import pytest

from cubegrowth.algebra.laurent import LaurentPolynomial
from cubegrowth.algebra.rational import RationalFunction
from cubegrowth.exceptions import NotExpandable

T = ("t",)


def p(*coefficients, variables=T):
    return LaurentPolynomial(variables, {(k,): c for k, c in enumerate(coefficients)})


def test_cross_multiplication_equality():
    f = RationalFunction(p(1, 1))
    g = RationalFunction(p(1, 0, -1), p(1, -1))
    assert f == g
    assert RationalFunction(p(2), p(4)) == Fraction(1, 2)
    assert RationalFunction(p(1), p(1, -1)) != RationalFunction(p(1), p(1, 1))


def test_equality_is_transitive_on_rescaled_forms():
    base = RationalFunction(p(1, 1), p(1, -1))
    scaled = RationalFunction(p(3, 3), p(3, -3))
    shifted = RationalFunction(p(0, 0, 1, 1), p(0, 0, 1, -1))
    assert base == scaled == shifted
    assert scaled == shifted


def test_zero_denominator_is_rejected():
    with pytest.raises(ZeroDivisionError):
        RationalFunction(p(1), LaurentPolynomial.zero(T))


def test_normalized_reduces_common_factors():
    f = RationalFunction(p(0, 1, 1), p(0, 1, 0, -1))
    assert str(f) == "1/(1-t)"
    assert f.normalized() == f
    assert str(f.normalized()) == str(f.normalized().normalized())


def test_denominator_sign_is_fixed_by_the_lowest_term():
    assert str(RationalFunction(p(1), p(-1, 1))) == "-1/(1-t)"
    assert str(RationalFunction(p(1), p(1, -1)).invert_variables()) == "-t/(1-t)"


def test_display_forms():
    assert str(RationalFunction(p(1, -1, 0, 2), p(1, -1))) == "(1-t+2t^3)/(1-t)"
    assert str(RationalFunction(p(0, 12 * 3), p(3, 0, -42, 0, 3))) == "12t/(1-14t^2+t^4)"
    assert str(RationalFunction(p(2), p(4))) == "1/2"
    assert str(RationalFunction(LaurentPolynomial.zero(T), p(1, 1))) == "0"


def test_invert_variables_twice_is_the_identity():
    f = RationalFunction(p(1, -2, 0, 0, 1), p(1, 0, -14, 0, 1))
    assert f.invert_variables().invert_variables() == f
    assert f.invert_variables() != f


def test_palindromic_quotient_is_fixed_by_inversion():
    # (1-2t^2+t^4)/(1-14t^2+t^4)
    f = RationalFunction(p(1, 0, -2, 0, 1), p(1, 0, -14, 0, 1))
    assert f.invert_variables() == f


def test_arithmetic():
    f = RationalFunction(p(1), p(1, -1))
    g = RationalFunction(p(0, 1), p(1, -1))
    assert f + g == RationalFunction(p(1, 1), p(1, -1))
    assert f - 1 == g
    assert f * RationalFunction(p(1, -1)) == 1
    assert -f == RationalFunction(p(-1), p(1, -1))


def test_expand_geometric_series():
    assert RationalFunction(p(1), p(1, -1)).expand_univariate(4) == [1, 1, 1, 1, 1]
    assert RationalFunction(p(1, 1), p(1, -1)).expand_univariate(3) == [1, 2, 2, 2]
    assert RationalFunction.constant(T).expand_univariate(4) == [1, 0, 0, 0, 0]


def test_expand_removes_common_monomials_first():
    f = RationalFunction(p(0, 1, 1), p(0, 1, -1))
    assert f.expand_univariate(3) == [1, 2, 2, 2]


def test_expand_rejects_poles_at_zero():
    with pytest.raises(NotExpandable):
        RationalFunction(p(1), p(0, 1)).expand(3)
    with pytest.raises(NotExpandable):
        RationalFunction(LaurentPolynomial(T, {(-1,): 1})).expand(3)


def test_expand_multivariate():
    variables = ("s", "t")
    one = LaurentPolynomial.constant(variables)
    denominator = one - LaurentPolynomial.variable(variables, "s") - LaurentPolynomial.variable(variables, "t")
    coefficients = RationalFunction(one, denominator).expand(2)
    assert coefficients == {
        (0, 0): 1, (1, 0): 1, (0, 1): 1, (2, 0): 1, (1, 1): 2, (0, 2): 1,
    }


def test_evaluate():
    f = RationalFunction(p(1, 1), p(1, -1))
    assert f.evaluate({"t": Fraction(1, 2)}) == 3
    with pytest.raises(ZeroDivisionError):
        f.evaluate({"t": 1})


def test_json_form():
    f = RationalFunction(p(0, 3, 0, 3), p(1, 0, -14, 0, 1))
    data = f.to_json()
    assert data == {"num": {"1": "3", "3": "3"}, "den": {"0": "1", "2": "-14", "4": "1"}, "vars": ["t"]}
    assert RationalFunction.from_json(data) == f
