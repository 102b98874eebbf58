from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, strategies as st

from grasscoh.errors import ParseError, RangeError, ShapeError
from grasscoh.linalg import SparseReducer, determinant, inverse, matmul, identity, solve
from grasscoh.poly import (Polynomial, basis_key, elementary_symmetric, format_terms, is_palindromic,
                           monomials_of_degree, monomials_up_to, order_key, parse_polynomial,
                           poly_divide_univariate, rational_str, scalar, trim_index, univariate)

N = 3
XS = sympy.symbols("x1:4")

exps = st.tuples(*[st.integers(0, 3)] * N)
coefs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(exps, coefs, max_size=5).map(lambda d: Polynomial(N, d))


def to_sympy(f: Polynomial):
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) *
                            sympy.Mul(*[x ** e for x, e in zip(XS, a)]) for a, c in f.items()))


@given(polys, polys)
def test_product_matches_sympy(f, g):
    assert to_sympy(f * g) == sympy.expand(to_sympy(f) * to_sympy(g))


@given(polys, polys)
def test_sum_matches_sympy(f, g):
    assert to_sympy(f + g - g) == to_sympy(f)
    assert to_sympy(f - g) == sympy.expand(to_sympy(f) - to_sympy(g))


@given(polys, st.tuples(*[coefs] * N))
def test_evaluate_matches_sympy(f, pt):
    want = to_sympy(f).subs(dict(zip(XS, [sympy.Rational(x.numerator, x.denominator) for x in pt])))
    assert f.evaluate(pt) == Fraction(int(sympy.numer(want)), int(sympy.denom(want)))


@given(polys)
def test_text_round_trip(f):
    assert parse_polynomial(f.to_string("x"), N, "x") == f


@given(st.lists(coefs, min_size=1, max_size=5), st.integers(0, 5))
def test_elementary_symmetric_value_matches_brute_force(pt, k):
    brute = sum((Fraction(1) * _prod(c) for c in combinations(pt, k)), Fraction(0)) if k <= len(pt) else None
    if brute is None:
        with pytest.raises(RangeError):
            elementary_symmetric(k, pt)
    else:
        assert elementary_symmetric(k, pt) == brute


def _prod(xs):
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


def test_elementary_symmetric_polynomial():
    e2 = elementary_symmetric(2, 3)
    assert e2 == parse_polynomial("x1*x2 + x1*x3 + x2*x3", 3)
    assert e2.evaluate((1, 2, 3)) == 11


def test_scalars_refuse_floats():
    with pytest.raises(TypeError):
        scalar(0.5)
    assert scalar("3/6") == Fraction(1, 2)
    assert rational_str(Fraction(3)) == "3/1"


def test_order_and_basis_key():
    # degree first, then r1 > r2 inside a degree
    assert monomials_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]
    labels = [format_terms([(a, 1)], "r") for a in monomials_up_to(2, 3)]
    assert labels == ["1", "r1", "r2", "r1^2", "r1*r2", "r2^2", "r1^3", "r1^2*r2", "r1*r2^2", "r2^3"]
    assert order_key((2, 0)) > order_key((1, 1)) > order_key((0, 2)) > order_key((1, 0))
    assert sorted([(0, 2), (2, 0)], key=basis_key) == [(2, 0), (0, 2)]
    assert trim_index((1, 0, 0)) == (1,)


def test_text_form():
    f = parse_polynomial("3*r1^2*r2 - r2^2", 2, "r")
    assert str(f.to_string("r")) == "3*r1^2*r2 - r2^2"
    with pytest.raises(ParseError):
        parse_polynomial("3*y1", 2, "r")


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        Polynomial.variable(1, 2) + Polynomial.variable(1, 3)


def test_univariate_division_and_palindromes():
    num = univariate({0: 1, 8: -1})
    den = univariate({0: 1, 2: -1})
    q, r = poly_divide_univariate(num, den)
    assert r.is_zero() and q == univariate({0: 1, 2: 1, 4: 1, 6: 1})
    assert is_palindromic(q) and not is_palindromic(univariate({0: 1, 1: 2}))


def test_linear_algebra():
    a = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    assert matmul(a, inverse(a)) == identity(2)
    assert solve(a, [[Fraction(3)], [Fraction(4)]]) == [[Fraction(1)], [Fraction(1)]]
    assert determinant(a, Fraction(1), Fraction(0)) == 5


def test_sparse_reducer_fully_reduces():
    red = SparseReducer(priority=lambda col: col)
    assert red.add({"a": Fraction(1), "b": Fraction(2)}) is not None
    assert red.add({"a": Fraction(2), "b": Fraction(4)}) is None
    red.add({"b": Fraction(1), "c": Fraction(1)})
    # the first pivot row was re-reduced against the new pivot b
    assert red.pivots["a"] == {"a": 1, "c": -2}
    assert red.reduce({"a": Fraction(1)}) == {"c": Fraction(2)}
