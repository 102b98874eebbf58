from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from grasscoh.errors import PreconditionError, RangeError, UnsupportedCase
from grasscoh.poly import Polynomial, elementary_symmetric
from grasscoh.weyl import (SO_EVEN_EVEN, SO_EVEN_ODD, SO_ODD_ODD, SO_U, SP_PQ, SP_U, U_PQ, EvalVector,
                           WeylCase, coset_points, enumerate_shuffles, ev_map, generator_values,
                           invariant_values, is_invariant, rho_vector, shuffle_apply)


def positive_roots(kind: str, n: int):
    """Positive roots of the classical root systems in the standard basis."""
    def e(*pairs):
        v = [0] * n
        for i, s in pairs:
            v[i] += s
        return v
    roots = [e((i, 1), (j, -1)) for i, j in combinations(range(n), 2)]
    if kind in "BCD":
        roots += [e((i, 1), (j, 1)) for i, j in combinations(range(n), 2)]
    if kind == "B":
        roots += [e((i, 1)) for i in range(n)]
    if kind == "C":
        roots += [e((i, 2)) for i in range(n)]
    return roots


def half_sum(kind: str, n: int):
    rs = positive_roots(kind, n)
    return tuple(Fraction(sum(r[i] for r in rs), 2) for i in range(n))


@pytest.mark.parametrize("case_id,kind,extra", [
    (U_PQ, "A", 0), (SP_PQ, "C", 0), (SO_EVEN_EVEN, "D", 0), (SO_EVEN_ODD, "B", 0), (SO_ODD_ODD, "D", 1)])
@pytest.mark.parametrize("p,q", [(1, 1), (1, 2), (2, 3), (3, 3)])
def test_rho_is_half_sum_of_positive_roots(case_id, kind, extra, p, q):
    # DERIVED: explicit root systems; the odd x odd case drops the trailing zero of D_{n+1}
    want = half_sum(kind, p + q + extra)[:p + q]
    assert tuple(rho_vector(WeylCase.two_block(case_id, p, q))) == want


@pytest.mark.parametrize("case_id,kind", [(SP_U, "C"), (SO_U, "D")])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rank_case_rho(case_id, kind, n):
    assert tuple(rho_vector(WeylCase.rank(case_id, n))) == half_sum(kind, n)


@pytest.mark.parametrize("p,q", [(1, 1), (2, 2), (2, 4), (3, 3)])
def test_shuffle_count(p, q):
    sh = enumerate_shuffles(p, q)
    assert len(sh) == comb(p + q, p)
    assert [s.subset for s in sh] == sorted(s.subset for s in sh)


def test_shuffle_apply():
    sh = enumerate_shuffles(2, 2)[1]
    assert sh.subset == (1, 3)
    assert shuffle_apply(sh, ("a", "b", "c", "d")) == ("a", "c", "b", "d")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sign_case_orbit_sizes(n):
    assert len(coset_points(WeylCase.rank(SP_U, n))) == 2 ** n
    assert len(coset_points(WeylCase.rank(SO_U, n))) == 2 ** (n - 1)


@pytest.mark.parametrize("case_id", [U_PQ, SP_PQ, SO_EVEN_EVEN, SO_EVEN_ODD, SO_ODD_ODD])
def test_invariant_values_brute_force(case_id):
    case = WeylCase.two_block(case_id, 2, 3)
    rho = list(rho_vector(case))
    vals = rho if case.family == "A" else [x * x for x in rho]
    brute = []
    for k in range(1, 6):
        tot = Fraction(0)
        for c in combinations(vals, k):
            term = Fraction(1)
            for x in c:
                term *= x
            tot += term
        brute.append(tot)
    assert invariant_values(case) == tuple(brute)


def test_reference_values():
    # TRIVIAL: U(2) with rho = (1/2,-1/2): t_1 = 0, t_2 = -1/4
    assert invariant_values(WeylCase.two_block(U_PQ, 1, 1)) == (0, Fraction(-1, 4))
    # SO(2n)/U(n): the last constant is the product of the coordinates
    assert invariant_values(WeylCase.rank(SO_U, 3))[-1] == 0
    assert invariant_values(WeylCase.rank(SP_U, 2)) == (5, 4)


def test_generator_values_squares():
    case = WeylCase.two_block(SP_PQ, 1, 1)
    assert generator_values(case, (2, 1)) == (4,)
    assert generator_values(WeylCase.two_block(U_PQ, 1, 1), (2, 1)) == (2,)


def test_invariance_check():
    case = WeylCase.two_block(U_PQ, 1, 2)
    x1, x2, x3 = (Polynomial.variable(i, 3) for i in (1, 2, 3))
    assert is_invariant(x1, case)
    assert is_invariant(x2 * x3 + x1 * x1, case)
    assert not is_invariant(x2, case)
    with pytest.raises(PreconditionError):
        ev_map(x2, rho_vector(case), case)
    b = WeylCase.two_block(SP_PQ, 1, 2)
    assert not is_invariant(x1, b) and is_invariant(x1 * x1, b)
    d = WeylCase.two_block(SO_EVEN_EVEN, 1, 1)
    assert is_invariant(Polynomial.variable(1, 2) * Polynomial.variable(2, 2), d)
    assert not is_invariant(Polynomial.variable(1, 2), d)


small = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
                        st.integers(-3, 3), max_size=4)


@given(small, small)
def test_ev_is_multiplicative(a, b):
    case = WeylCase.two_block(SP_PQ, 1, 2)
    sq = lambda d: Polynomial(3, {tuple(2 * e for e in k): v for k, v in d.items()})
    # symmetrize over the second block so the polynomial is W_K-invariant
    f, g = sq(a), sq(b)
    f = f + Polynomial(3, {(k[0], k[2], k[1]): v for k, v in f.items()})
    g = g + Polynomial(3, {(k[0], k[2], k[1]): v for k, v in g.items()})
    rho = rho_vector(case)
    assert ev_map(f * g, rho, case) == ev_map(f, rho, case) * ev_map(g, rho, case)


def test_eval_vector_json_round_trip():
    v = EvalVector((Fraction(1, 2), Fraction(-3)))
    assert v.to_json() == '["1/2", "-3/1"]'
    assert EvalVector.from_json(v.to_json()) == v


def test_errors():
    with pytest.raises(RangeError):
        WeylCase.two_block(U_PQ, 0, 2)
    with pytest.raises(UnsupportedCase):
        WeylCase.two_block("E8/whatever", 1, 1)
    with pytest.raises(RangeError):
        coset_points(WeylCase.two_block(U_PQ, 1, 1), (1, 2, 3))
