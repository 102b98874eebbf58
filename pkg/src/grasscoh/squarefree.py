"""Algebras with a square-free monomial basis: Sp(n)/U(n) and SO(2n)/U(n).

The relation r(z) r(-z) = t(-z^2) gives, degree by degree,

    r_k^2 = t_k + 2 r_{k-1} r_{k+1} - 2 r_{k-2} r_{k+2} + ...

with r_0 = 1 and r_j = 0 for j > n. For SO(2n)/U(n) the generator r_n is
a constant (tbar_n) and is eliminated, leaving n-1 generators.

Rewriting terminates because F(d) = sum f(k) d_k with f(k) = k(n+1-k)
strictly drops at every step; the check is on by default.
"""

from __future__ import annotations

import random as _random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import InvariantViolation, PreconditionError, RangeError, ShapeError
from .linalg import inverse
from .poly import Polynomial, basis_key, format_terms, order_key, scalar, univariate
from .weyl import EvalVector, WeylCase, coset_points, generator_values, invariant_values

C_OVER_A = "C/A"
D_OVER_A = "D/A"


@dataclass(frozen=True)
class SquarefreeDescriptor:
    n: int
    variant: str = C_OVER_A
    t: tuple = ()
    tbar_n: Fraction = Fraction(0)

    def __post_init__(self):
        if self.n < 1:
            raise RangeError("n must be at least 1")
        if self.variant not in (C_OVER_A, D_OVER_A):
            raise RangeError(f"unknown variant {self.variant!r}")
        t = tuple(scalar(x) for x in self.t) or (Fraction(0),) * self.m
        if len(t) != self.m:
            raise ShapeError(f"t must have {self.m} entries")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "tbar_n", scalar(self.tbar_n))
        if self.variant == C_OVER_A and self.tbar_n:
            raise RangeError("tbar_n only exists for the D variant")

    @property
    def m(self) -> int:
        """Number of generators kept."""
        return self.n if self.variant == C_OVER_A else self.n - 1

    @property
    def is_graded(self) -> bool:
        return not any(self.t) and not self.tbar_n

    @property
    def dim(self) -> int:
        return 2 ** self.m

    @property
    def case_id(self) -> str:
        return "Sp(n)/U(n)" if self.variant == C_OVER_A else "SO(2n)/U(n)"

    def potential(self, d: Sequence[int]) -> int:
        n = self.n
        return sum(k * (n + 1 - k) * e for k, e in enumerate(d, start=1))

    def degree(self, eps: Sequence[int]) -> int:
        return sum(2 * i * e for i, e in enumerate(eps, start=1))

    def to_dict(self) -> dict:
        d = {"family": "squarefree-C" if self.variant == C_OVER_A else "squarefree-D",
             "n": self.n, "generators": self.m,
             "t": [f"{x.numerator}/{x.denominator}" for x in self.t]}
        if self.variant == D_OVER_A:
            d["tbar_n"] = f"{self.tbar_n.numerator}/{self.tbar_n.denominator}"
        return d

    def __str__(self) -> str:
        t = ",".join(str(x) for x in self.t)
        s = f"{self.case_id} n={self.n}, t=({t})"
        if self.variant == D_OVER_A:
            s += f", r{self.n} = {self.tbar_n}"
        return s


class SquarefreeElement:
    __slots__ = ("descriptor", "_coords")

    def __init__(self, descriptor: SquarefreeDescriptor, coords: Mapping | None = None):
        self.descriptor = descriptor
        clean = {}
        for eps, v in (coords or {}).items():
            eps = tuple(eps)
            if len(eps) != descriptor.m or any(e not in (0, 1) for e in eps):
                raise ShapeError(f"{eps} is not a square-free basis monomial")
            v = scalar(v)
            if v:
                clean[eps] = v
        self._coords = clean

    @property
    def coords(self) -> Mapping:
        return MappingProxyType(self._coords)

    @classmethod
    def one(cls, d: SquarefreeDescriptor) -> "SquarefreeElement":
        return cls(d, {(0,) * d.m: 1})

    def polynomial(self) -> Polynomial:
        return Polynomial(self.descriptor.m, self._coords)

    def __add__(self, other: "SquarefreeElement") -> "SquarefreeElement":
        if not isinstance(other, SquarefreeElement) or other.descriptor != self.descriptor:
            raise ShapeError("elements belong to different algebras")
        out = dict(self._coords)
        for k, v in other._coords.items():
            out[k] = out.get(k, 0) + v
        return SquarefreeElement(self.descriptor, out)

    def scale(self, c) -> "SquarefreeElement":
        c = scalar(c)
        return SquarefreeElement(self.descriptor, {k: v * c for k, v in self._coords.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return multiply_sf(self, other)

    def vector(self) -> list[Fraction]:
        return [self._coords.get(b, Fraction(0)) for b in basis_sf(self.descriptor)]

    def component(self, degree: int) -> "SquarefreeElement":
        d = self.descriptor
        return SquarefreeElement(d, {k: v for k, v in self._coords.items() if d.degree(k) == degree})

    def is_zero(self) -> bool:
        return not self._coords

    def __eq__(self, other) -> bool:
        if not isinstance(other, SquarefreeElement):
            return NotImplemented
        return self.descriptor == other.descriptor and self._coords == other._coords

    def __hash__(self):
        return hash((self.descriptor, frozenset(self._coords.items())))

    def __str__(self) -> str:
        return format_terms(sorted(self._coords.items(), key=lambda t: order_key(t[0]), reverse=True), "r")

    def __repr__(self) -> str:
        return f"SquarefreeElement({str(self)!r})"


def rewrite_square(k: int, descriptor: SquarefreeDescriptor) -> dict:
    """Right-hand side of r_k^2 as {exponent vector: coefficient}."""
    d = descriptor
    if not 1 <= k <= d.m:
        raise RangeError(f"k must be in 1..{d.m}")
    out: dict = defaultdict(Fraction)
    zero = (0,) * d.m
    if d.t[k - 1]:
        out[zero] += d.t[k - 1]
    for i in range(1, k + 1):
        lo, hi = k - i, k + i
        if hi > d.n:
            break
        coef = Fraction(2 * (-1) ** (i + 1))
        mono = [0] * d.m
        if lo >= 1:
            mono[lo - 1] += 1
        if hi == d.n and d.variant == D_OVER_A:
            coef *= d.tbar_n
        else:
            mono[hi - 1] += 1
        if coef:
            out[tuple(mono)] += coef
    return {a: v for a, v in out.items() if v}


def _pick(mono: tuple) -> int:
    # smallest k with exponent >= 2, 1-based
    return next(k for k, e in enumerate(mono, start=1) if e >= 2)


def _apply(descriptor: SquarefreeDescriptor, mono: tuple, k: int, check: bool):
    rest = list(mono)
    rest[k - 1] -= 2
    before = descriptor.potential(mono)
    for delta, c in rewrite_square(k, descriptor).items():
        new = tuple(a + b for a, b in zip(rest, delta))
        if check and descriptor.potential(new) >= before:
            raise InvariantViolation(f"potential did not drop: {mono} -> {new}")
        yield new, c


@lru_cache(maxsize=None)
def _nf_monomial(descriptor: SquarefreeDescriptor, mono: tuple) -> tuple:
    if all(e <= 1 for e in mono):
        return ((mono, Fraction(1)),)
    out: dict = {}
    for new, c in _apply(descriptor, mono, _pick(mono), True):
        for eps, v in _nf_monomial(descriptor, new):
            out[eps] = out.get(eps, 0) + c * v
    return tuple((a, v) for a, v in out.items() if v)


def normal_form_sf(descriptor: SquarefreeDescriptor, x, rng: _random.Random | None = None,
                   trace: list | None = None) -> SquarefreeElement:
    """Rewrite squares until every exponent is 0 or 1.

    ``x`` is a polynomial in the kept generators, or a mapping of exponent
    vectors. With ``rng`` the term and the square to rewrite are chosen at
    random; ``trace`` then receives one (F before, [F after]) pair per step.
    """
    terms = dict(x.items()) if isinstance(x, Polynomial) else {tuple(a): scalar(v) for a, v in dict(x).items()}
    if isinstance(x, Polynomial) and x.nvars != descriptor.m:
        raise ShapeError(f"expected a polynomial in {descriptor.m} variables")
    if rng is None and trace is None:
        out: dict = {}
        for mono, c in terms.items():
            for eps, v in _nf_monomial(descriptor, tuple(mono)):
                out[eps] = out.get(eps, 0) + c * v
        return SquarefreeElement(descriptor, out)
    rng = rng or _random.Random(0)
    work = {a: v for a, v in terms.items() if v}
    # pool of reducible monomials with swap-remove, so a random pick is O(1)
    pool: list = []
    where: dict = {}

    def track(m):
        if m not in where and any(e >= 2 for e in m):
            where[m] = len(pool)
            pool.append(m)

    def untrack(m):
        i = where.pop(m, None)
        if i is not None:
            last = pool.pop()
            if i < len(pool):
                pool[i] = last
                where[last] = i

    for m in sorted(work, key=order_key):
        track(m)
    while True:
        if not pool:
            return SquarefreeElement(descriptor, work)
        mono = pool[rng.randrange(len(pool))]
        untrack(mono)
        coef = work.pop(mono)
        k = rng.choice([i for i, e in enumerate(mono, start=1) if e >= 2])
        produced = list(_apply(descriptor, mono, k, True))
        if trace is not None:
            trace.append((descriptor.potential(mono), [descriptor.potential(m) for m, _ in produced]))
        for new, c in produced:
            v = work.get(new, 0) + coef * c
            if v:
                work[new] = v
                track(new)
            else:
                work.pop(new, None)
                untrack(new)


def multiply_sf(a: SquarefreeElement, b: SquarefreeElement) -> SquarefreeElement:
    if not isinstance(b, SquarefreeElement) or a.descriptor != b.descriptor:
        raise ShapeError("elements belong to different algebras")
    prod: dict = {}
    for x, u in a.coords.items():
        for y, v in b.coords.items():
            m = tuple(s + t for s, t in zip(x, y))
            prod[m] = prod.get(m, 0) + u * v
    return normal_form_sf(a.descriptor, {m: v for m, v in prod.items() if v})


def basis_sf(descriptor: SquarefreeDescriptor) -> list[tuple[int, ...]]:
    m = descriptor.m
    mons = [tuple((i >> j) & 1 for j in range(m)) for i in range(2 ** m)]
    return sorted(mons, key=basis_key)


def poincare_sf(descriptor: SquarefreeDescriptor) -> Polynomial:
    if not descriptor.is_graded:
        raise PreconditionError("Poincare polynomial needs graded mode")
    coeffs: dict[int, int] = defaultdict(int)
    for eps in basis_sf(descriptor):
        coeffs[descriptor.degree(eps)] += 1
    return univariate(coeffs)


def _case(descriptor: SquarefreeDescriptor) -> WeylCase:
    case = WeylCase.rank(descriptor.case_id, descriptor.n)
    vals = invariant_values(case)
    expect = vals if descriptor.variant == C_OVER_A else vals[:-1]
    if tuple(expect) != descriptor.t or (descriptor.variant == D_OVER_A and vals[-1] != descriptor.tbar_n):
        raise PreconditionError("descriptor constants are not t(rho)")
    return case


def ev_sf(x: SquarefreeElement) -> EvalVector:
    """Values at the sign-change images of rho (deformed descriptors only)."""
    case = _case(x.descriptor)
    poly = x.polynomial()
    return EvalVector(tuple(poly.evaluate(generator_values(case, pt)) for pt in coset_points(case)))


def idempotents_sf(descriptor: SquarefreeDescriptor) -> list[SquarefreeElement]:
    case = _case(descriptor)
    mons = basis_sf(descriptor)
    gens = [generator_values(case, pt) for pt in coset_points(case)]
    if len(gens) != len(mons):
        raise InvariantViolation(f"{len(gens)} evaluation points for a {len(mons)}-dimensional algebra")
    vmat = [[Polynomial.monomial(m).evaluate(g) for m in mons] for g in gens]
    inv = inverse(vmat)
    return [SquarefreeElement(descriptor, {m: inv[k][s] for k, m in enumerate(mons)})
            for s in range(len(gens))]
