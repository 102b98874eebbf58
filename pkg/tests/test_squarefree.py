import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from grasscoh.errors import PreconditionError, RangeError, ShapeError
from grasscoh.poly import Polynomial
from grasscoh.squarefree import (C_OVER_A, D_OVER_A, SquarefreeDescriptor, SquarefreeElement, basis_sf,
                                 idempotents_sf, multiply_sf, normal_form_sf, poincare_sf, rewrite_square)
from grasscoh.weyl import SO_U, SP_U, WeylCase, invariant_values


def deformed(n, variant):
    if variant == C_OVER_A:
        return SquarefreeDescriptor(n, variant, invariant_values(WeylCase.rank(SP_U, n)))
    vals = invariant_values(WeylCase.rank(SO_U, n))
    return SquarefreeDescriptor(n, variant, vals[:-1], vals[-1])


def test_square_rules_small():
    # DERIVED: coefficient of z^2 in r(z) r(-z) = t(-z^2) gives r1^2 = t1 + 2 r2
    d = SquarefreeDescriptor(2, C_OVER_A, (3, 5))
    assert rewrite_square(1, d) == {(0, 0): 3, (0, 1): 2}
    assert rewrite_square(2, d) == {(0, 0): 5}
    d3 = SquarefreeDescriptor(3)
    assert rewrite_square(2, d3) == {(1, 0, 1): 2}
    assert rewrite_square(1, d3) == {(0, 1, 0): 2}


def test_square_rules_from_generating_function():
    # DERIVED: expand r(z) r(-z) with sympy and read off each r_k^2
    n = 4
    z = sympy.Symbol("z")
    r = sympy.symbols(f"r1:{n + 1}")
    t = sympy.symbols(f"t1:{n + 1}")
    rz = 1 + sum(r[i] * z ** (i + 1) for i in range(n))
    lhs = sympy.expand(rz * rz.subs(z, -z))
    tz = 1 + sum(t[i] * (-z ** 2) ** (i + 1) for i in range(n))
    rel = sympy.expand(lhs - tz)
    d = SquarefreeDescriptor(n, C_OVER_A, (2, 3, 5, 7))
    for k in range(1, n + 1):
        coeff = rel.coeff(z, 2 * k) * (-1) ** k
        # coeff = r_k^2 - t_k - (rest); solve for r_k^2
        rhs = sympy.expand(r[k - 1] ** 2 - coeff)
        rhs = rhs.subs(dict(zip(t, (2, 3, 5, 7))))
        got = sum(v * sympy.Mul(*[x ** e for x, e in zip(r, a)]) for a, v in rewrite_square(k, d).items())
        assert sympy.expand(rhs - got) == 0


def test_d_variant_substitutes_last_generator():
    d = SquarefreeDescriptor(3, D_OVER_A, (1, 2), 5)
    assert d.m == 2
    # r1^2 = t1 + 2 r2, r2^2 = t2 + 2 r1 r3 with r3 = 5
    assert rewrite_square(2, d) == {(0, 0): 2, (1, 0): 10}


@pytest.mark.parametrize("n", range(1, 8))
def test_dimensions_and_poincare(n):
    c = SquarefreeDescriptor(n, C_OVER_A)
    dd = SquarefreeDescriptor(n, D_OVER_A)
    assert len(basis_sf(c)) == 2 ** n and len(basis_sf(dd)) == 2 ** (n - 1)
    want = Polynomial.constant(1, 1)
    for i in range(1, n + 1):
        want = want * Polynomial(1, {(0,): 1, (2 * i,): 1})
    assert poincare_sf(c) == want


def test_graded_products():
    d = SquarefreeDescriptor(3)
    r = lambda *a: SquarefreeElement(d, {a: 1})
    assert multiply_sf(r(1, 0, 0), r(1, 0, 0)) == r(0, 1, 0).scale(2)
    # r2^2 = 2 r1 r3 - 2 r4 with r4 = 0
    assert multiply_sf(r(0, 1, 0), r(0, 1, 0)) == r(1, 0, 1).scale(2)


monos = st.tuples(*[st.integers(0, 3)] * 4)


@given(st.dictionaries(monos, st.integers(-3, 3), max_size=3), st.integers(0, 10 ** 6),
       st.sampled_from([C_OVER_A, D_OVER_A]), st.booleans())
def test_random_strategy_terminates_and_agrees(terms, seed, variant, deform):
    n = 4 if variant == C_OVER_A else 5
    d = deformed(n, variant) if deform else SquarefreeDescriptor(n, variant)
    trace = []
    got = normal_form_sf(d, terms, rng=random.Random(seed), trace=trace)
    assert all(after < before for before, afters in trace for after in afters)
    assert got == normal_form_sf(d, terms)


@given(st.lists(st.dictionaries(st.tuples(*[st.integers(0, 1)] * 3), st.integers(-2, 2), max_size=3),
                min_size=3, max_size=3))
def test_associative(parts):
    d = deformed(3, C_OVER_A)
    x, y, z = (SquarefreeElement(d, p) for p in parts)
    assert multiply_sf(multiply_sf(x, y), z) == multiply_sf(x, multiply_sf(y, z))


@pytest.mark.parametrize("n,variant", [(1, C_OVER_A), (2, C_OVER_A), (3, C_OVER_A), (2, D_OVER_A),
                                       (3, D_OVER_A), (4, D_OVER_A)])
def test_idempotents(n, variant):
    d = deformed(n, variant)
    ids = idempotents_sf(d)
    assert len(ids) == d.dim
    total = ids[0]
    for x in ids[1:]:
        total = total + x
    assert total == SquarefreeElement.one(d)
    for i, x in enumerate(ids):
        assert multiply_sf(x, x) == x
        assert all(multiply_sf(x, y).is_zero() for y in ids[i + 1:])


def test_errors():
    with pytest.raises(RangeError):
        SquarefreeDescriptor(0)
    with pytest.raises(ShapeError):
        SquarefreeDescriptor(2, C_OVER_A, (1,))
    with pytest.raises(RangeError):
        SquarefreeDescriptor(2, C_OVER_A, (1, 2), 3)
    with pytest.raises(PreconditionError):
        idempotents_sf(SquarefreeDescriptor(2))
    with pytest.raises(PreconditionError):
        poincare_sf(SquarefreeDescriptor(2, C_OVER_A, (1, 2)))
    with pytest.raises(ShapeError):
        SquarefreeElement(SquarefreeDescriptor(2), {(2, 0): 1})
