import json
from itertools import combinations
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from grasscoh.errors import ParseError, PreconditionError, RangeError
from grasscoh.hpq import RingDescriptor, normal_form
from grasscoh.schur import (Partition, box_partitions, format_schur, from_schur, jacobi_trudi,
                            parse_partition, pieri_oracle, schur_multiply, schur_vector_json, to_schur,
                            transition_matrices)

REFERENCE_EXPANSIONS = {
    (0, 0): "1", (1, 0): "r1", (2, 0): "r1^2 - r2", (3, 0): "r1^3 - 2*r1*r2",
    (1, 1): "r2", (2, 1): "r1*r2", (3, 1): "r1^2*r2 - r2^2",
    (2, 2): "r2^2", (3, 2): "r1*r2^2", (3, 3): "r2^3",
}


def test_reference_expansions():
    for lam, text in REFERENCE_EXPANSIONS.items():
        assert jacobi_trudi(Partition(lam), 2, 3).to_string("r") == text


def bialternant(lam, p):
    """s_lambda(x_1..x_p) as a ratio of alternants, via sympy."""
    xs = sympy.symbols(f"x1:{p + 1}")
    parts = list(lam) + [0] * (p - len(lam))
    num = sympy.Matrix(p, p, lambda i, j: xs[i] ** (parts[j] + p - 1 - j)).det()
    den = sympy.Matrix(p, p, lambda i, j: xs[i] ** (p - 1 - j)).det()
    return sympy.expand(sympy.cancel(num / den)), xs


@pytest.mark.parametrize("p,q", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_jacobi_trudi_matches_bialternant(p, q):
    # DERIVED: classical definition of s_lambda, independent of the determinant in r
    for lam in box_partitions(p, q):
        want, xs = bialternant(lam.parts, p)
        es = [sympy.Add(*[sympy.Mul(*c) for c in combinations(xs, k)])
              for k in range(1, p + 1)]
        f = jacobi_trudi(lam, p, q)
        got = sum(sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[e ** a for e, a in zip(es, al)])
                  for al, c in f.items())
        assert sympy.expand(got - want) == 0


@pytest.mark.parametrize("p,q", [(1, 1), (2, 3), (3, 3), (2, 5)])
def test_transition_is_unitriangular(p, q):
    fwd, back = transition_matrices(p, q)
    assert fwd.is_unitriangular() and back.is_unitriangular()
    n = len(fwd.rows)
    for i in range(n):
        for j in range(n):
            tot = sum(fwd.entries[i][k] * back.entries[k][j] for k in range(n))
            assert tot == (1 if i == j else 0)


def test_box_partitions():
    assert [l.format(2) for l in box_partitions(2, 3)] == [
        "(0,0)", "(1,0)", "(1,1)", "(2,0)", "(2,1)", "(2,2)", "(3,0)", "(3,1)", "(3,2)", "(3,3)"]


@pytest.mark.parametrize("p,q", [(1, 2), (2, 2), (2, 3), (3, 3)])
def test_pieri(p, q):
    d = RingDescriptor.graded(p, q)
    for lam in box_partitions(p, q):
        for k in range(1, p + 1):
            assert schur_multiply(lam, Partition((1,) * k), d) == pieri_oracle(lam, k, p, q)


def test_littlewood_richardson_square_of_21():
    # DERIVED: s_21^2 from the standard LR table, everything fits in the 4x4 box
    got = schur_multiply(Partition((2, 1)), Partition((2, 1)), RingDescriptor.graded(4, 4))
    want = {(4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2, (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 2, 1, 1): 1}
    assert got == {Partition(k): Fraction(v) for k, v in want.items()}


def test_product_outside_box_vanishes():
    d = RingDescriptor.graded(2, 3)
    assert schur_multiply(Partition((3, 3)), Partition((1,)), d) == {}
    assert schur_multiply(Partition((1,)), Partition((1,)), d) == {Partition((2,)): 1, Partition((1, 1)): 1}


@given(st.dictionaries(st.sampled_from(box_partitions(2, 3)), st.integers(-3, 3).filter(bool), max_size=5))
def test_schur_round_trip(vec):
    poly = from_schur(vec, 2, 3)
    x = normal_form(RingDescriptor.graded(2, 3), poly)
    assert to_schur(x.coords, 2, 3) == vec


def test_formatting_and_parsing():
    vec = {Partition((2,)): Fraction(1), Partition((1, 1)): Fraction(1)}
    assert format_schur(vec, 2) == "s_(2,0) + s_(1,1)"
    assert json.loads(schur_vector_json(vec, 2)) == {"(1,1)": "1/1", "(2,0)": "1/1"}
    assert parse_partition("(2,1)") == Partition((2, 1)) == parse_partition("2, 1, 0")
    assert parse_partition("()") == Partition(())
    with pytest.raises(ParseError):
        parse_partition("(a,b)")
    with pytest.raises(RangeError):
        Partition((1, 2))
    assert Partition((3, 1)).transpose() == Partition((2, 1, 1))


def test_errors():
    with pytest.raises(RangeError):
        jacobi_trudi(Partition((4,)), 2, 3)
    with pytest.raises(RangeError):
        pieri_oracle(Partition(()), 3, 2, 3)
    with pytest.raises(PreconditionError):
        schur_multiply(Partition(()), Partition(()), RingDescriptor("A", 1, 1, (1, 0)))
