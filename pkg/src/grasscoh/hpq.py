"""The algebras H(p,q;c) on generators r_1..r_p.

The s-generators are eliminated with the first q relations. What is left
is a quotient of Q[r_1..r_p] whose basis is the monomials of total degree
at most q. Products are reduced with a rewrite table sending every degree
q+1 monomial into that span.

The table is built by exact elimination, one weight at a time, where r_i
has weight i. Every relation used is a consequence of the residual
relations, so a complete table is automatically correct. Completeness and
the absence of relations among basis monomials are both checked.
"""

from __future__ import annotations

import random as _random
import threading
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import InvariantViolation, PreconditionError, RangeError, ShapeError
from .linalg import SparseReducer, determinant, inverse
from .poly import (Polynomial, basis_key, format_monomial, format_terms, monomials_of_degree,
                   monomials_up_to, order_key, scalar, univariate)
from .weyl import EvalVector, WeylCase, coset_points, generator_values, invariant_values


@dataclass(frozen=True)
class RingDescriptor:
    """Presentation data of one algebra H(p,q;c), optionally extended by e."""

    family: str
    p: int
    q: int
    c: tuple
    grading_weight: int = 2
    has_e: bool = False
    e_degree: int = 0
    e_square: Fraction = Fraction(0)
    case: str | None = None

    def __post_init__(self):
        if not 1 <= self.p <= self.q:
            raise RangeError(f"need 1 <= p <= q, got p={self.p}, q={self.q}")
        c = tuple(scalar(x) for x in self.c)
        if len(c) != self.p + self.q:
            raise ShapeError(f"c must have {self.p + self.q} entries, got {len(c)}")
        object.__setattr__(self, "c", c)
        if self.grading_weight not in (2, 4):
            raise RangeError("grading weight must be 2 or 4")
        sq = scalar(self.e_square)
        object.__setattr__(self, "e_square", sq)
        if self.has_e:
            if self.e_degree != 2 * self.p + 2 * self.q + 1:
                raise RangeError("e must have degree 2p+2q+1")
            if sq not in (0, 1):
                raise RangeError("e must square to 0 or 1")

    @classmethod
    def graded(cls, p: int, q: int, w: int = 2, family: str = "A", has_e: bool = False,
               case: str | None = None) -> "RingDescriptor":
        return cls(family, p, q, (0,) * (p + q), w, has_e,
                   2 * p + 2 * q + 1 if has_e else 0, Fraction(0), case)

    @property
    def is_graded(self) -> bool:
        return not any(self.c) and (not self.has_e or self.e_square == 0)

    @property
    def dim(self) -> int:
        return comb(self.p + self.q, self.p) * (2 if self.has_e else 1)

    def weight(self, alpha: Sequence[int]) -> int:
        return sum(i * a for i, a in enumerate(alpha, start=1))

    def degree(self, alpha: Sequence[int]) -> int:
        """Cohomological degree of r^alpha."""
        return self.grading_weight * self.weight(alpha)

    def graded_version(self) -> "RingDescriptor":
        return RingDescriptor.graded(self.p, self.q, self.grading_weight, self.family,
                                     self.has_e, self.case)

    def to_dict(self) -> dict:
        d = {
            "family": "hpq+e" if self.has_e else "hpq",
            "tag": self.family,
            "p": self.p,
            "q": self.q,
            "c": [f"{x.numerator}/{x.denominator}" for x in self.c],
            "grading_weight": self.grading_weight,
        }
        if self.has_e:
            d["e_degree"] = self.e_degree
            d["e_square"] = f"{self.e_square.numerator}/{self.e_square.denominator}"
        if self.case:
            d["case"] = self.case
        return d

    def __str__(self) -> str:
        c = ",".join(str(x) for x in self.c)
        s = f"H({self.p},{self.q};c=({c})) deg r_i = {self.grading_weight}i"
        if self.has_e:
            s += f", e of degree {self.e_degree} with e^2 = {self.e_square}"
        return s


class BasisMonomial(NamedTuple):
    alpha: tuple
    e: int = 0

    def label(self, var: str = "r") -> str:
        m = format_monomial(self.alpha, var)
        if self.e:
            return "e" if m == "1" else m + "*e"
        return m


class RingElement:
    """Normal-form coordinates of an element; immutable."""

    __slots__ = ("descriptor", "_coords", "_ecoords")

    def __init__(self, descriptor: RingDescriptor, coords: Mapping | None = None,
                 e_coords: Mapping | None = None):
        self.descriptor = descriptor
        q, p = descriptor.q, descriptor.p
        clean, eclean = {}, {}
        for src, dst in ((coords, clean), (e_coords, eclean)):
            for alpha, v in (src or {}).items():
                alpha = tuple(alpha)
                if len(alpha) != p or sum(alpha) > q:
                    raise ShapeError(f"{alpha} is not a basis monomial of {descriptor}")
                v = scalar(v)
                if v:
                    dst[alpha] = v
        if eclean and not descriptor.has_e:
            raise ShapeError("descriptor has no e generator")
        self._coords = clean
        self._ecoords = eclean

    @property
    def coords(self) -> Mapping:
        return MappingProxyType(self._coords)

    @property
    def e_coords(self) -> Mapping:
        return MappingProxyType(self._ecoords)

    @classmethod
    def one(cls, d: RingDescriptor) -> "RingElement":
        return cls(d, {(0,) * d.p: 1})

    @classmethod
    def generator(cls, d: RingDescriptor, i: int) -> "RingElement":
        if not 1 <= i <= d.p:
            raise RangeError(f"r_{i} is not a generator")
        if d.q == 0:
            raise RangeError("no generators")
        alpha = [0] * d.p
        alpha[i - 1] = 1
        return cls(d, {tuple(alpha): 1})

    @classmethod
    def e(cls, d: RingDescriptor) -> "RingElement":
        return cls(d, None, {(0,) * d.p: 1})

    @classmethod
    def from_basis(cls, d: RingDescriptor, b: BasisMonomial) -> "RingElement":
        return cls(d, None, {b.alpha: 1}) if b.e else cls(d, {b.alpha: 1})

    def polynomial(self) -> Polynomial:
        return Polynomial(self.descriptor.p, self._coords)

    def e_polynomial(self) -> Polynomial:
        return Polynomial(self.descriptor.p, self._ecoords)

    def vector(self) -> list[Fraction]:
        """Coordinates in the order of :func:`basis`."""
        return [(self._ecoords if b.e else self._coords).get(b.alpha, Fraction(0))
                for b in basis(self.descriptor)]

    def _same(self, other: "RingElement"):
        if not isinstance(other, RingElement) or other.descriptor != self.descriptor:
            raise ShapeError("elements belong to different algebras")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._same(other)
        return RingElement(self.descriptor, _add(self._coords, other._coords),
                           _add(self._ecoords, other._ecoords))

    def __neg__(self) -> "RingElement":
        return self.scale(-1)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def scale(self, c) -> "RingElement":
        c = scalar(c)
        return RingElement(self.descriptor, {a: v * c for a, v in self._coords.items()},
                           {a: v * c for a, v in self._ecoords.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self._coords and not self._ecoords

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return (self.descriptor == other.descriptor and self._coords == other._coords
                and self._ecoords == other._ecoords)

    def __hash__(self):
        return hash((self.descriptor, frozenset(self._coords.items()), frozenset(self._ecoords.items())))

    def component(self, degree: int) -> "RingElement":
        """Part of cohomological degree exactly ``degree``."""
        d = self.descriptor
        return RingElement(d, {a: v for a, v in self._coords.items() if d.degree(a) == degree},
                           {a: v for a, v in self._ecoords.items() if d.degree(a) + d.e_degree == degree})

    def __str__(self) -> str:
        main = format_terms(sorted(self._coords.items(), key=lambda t: order_key(t[0]), reverse=True), "r")
        if not self._ecoords:
            return main
        ep = format_terms(sorted(self._ecoords.items(), key=lambda t: order_key(t[0]), reverse=True), "r")
        epart = "e" if ep == "1" else f"({ep})*e"
        return epart if main == "0" else f"{main} + {epart}"

    def __repr__(self) -> str:
        return f"RingElement({str(self)!r})"


def _add(a: Mapping, b: Mapping) -> dict:
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) + v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _shift(alpha: tuple, i: int) -> tuple:
    # multiply a monomial by r_i (1-based)
    return alpha[:i - 1] + (alpha[i - 1] + 1,) + alpha[i:]


# relations


def eliminate_s(p: int, q: int, c: Sequence) -> tuple[list[Polynomial], list[Polynomial]]:
    """s_1..s_q as polynomials in r, and the residual relations R_{q+1}..R_{p+q}.

    Each R_k is the polynomial that must vanish: c_k minus the sum of r_i s_j
    over i+j = k.
    """
    if p < 1 or q < 1:
        raise RangeError("p and q must be at least 1")
    c = [scalar(x) for x in c]
    if len(c) != p + q:
        raise ShapeError(f"c must have {p + q} entries")
    one = Polynomial.constant(1, p)
    r = [one] + [Polynomial.variable(i, p) for i in range(1, p + 1)]
    s = [one]
    for j in range(1, q + 1):
        acc = Polynomial.constant(c[j - 1], p)
        for i in range(1, min(j, p) + 1):
            acc = acc - r[i] * s[j - i]
        s.append(acc)
    residuals = []
    for k in range(q + 1, p + q + 1):
        acc = Polynomial.constant(c[k - 1], p)
        for i in range(k - q, p + 1):
            acc = acc - r[i] * s[k - i]
        residuals.append(acc)
    return s[1:], residuals


@dataclass(frozen=True)
class RewriteTable:
    """Normal forms of all degree-(q+1) monomials."""

    p: int
    q: int
    c: tuple
    rules: Mapping
    _cache: dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def rule(self, alpha: Sequence[int]) -> Polynomial:
        return Polynomial(self.p, self.rules[tuple(alpha)])

    def reduce_monomial(self, alpha: tuple) -> dict:
        """Normal form of one monomial (deterministic split), memoized."""
        if sum(alpha) <= self.q:
            return {alpha: Fraction(1)}
        hit = self._cache.get(alpha)
        if hit is not None:
            return hit
        b, rest = _split_first(alpha, self.q + 1)
        out: dict = {}
        for beta, cb in self.rules[b].items():
            m = tuple(x + y for x, y in zip(beta, rest))
            for gamma, cg in self.reduce_monomial(m).items():
                v = out.get(gamma, 0) + cb * cg
                if v:
                    out[gamma] = v
                else:
                    out.pop(gamma, None)
        with self._lock:
            return self._cache.setdefault(alpha, out)

    def reduce(self, terms: Mapping) -> dict:
        out: dict = {}
        for alpha, c in terms.items():
            for gamma, v in self.reduce_monomial(tuple(alpha)).items():
                nv = out.get(gamma, 0) + c * v
                if nv:
                    out[gamma] = nv
                else:
                    out.pop(gamma, None)
        return out

    def reduce_random(self, terms: Mapping, rng: _random.Random) -> dict:
        """Normal form rewriting a random degree-(q+1) divisor of a random term each step."""
        work = {tuple(a): scalar(c) for a, c in terms.items() if c}
        q = self.q
        while True:
            big = sorted((m for m in work if sum(m) > q), key=order_key)
            if not big:
                return work
            m = rng.choice(big)
            coef = work.pop(m)
            letters = [i for i, e in enumerate(m) for _ in range(e)]
            chosen = rng.sample(letters, q + 1)
            b = [0] * self.p
            for i in chosen:
                b[i] += 1
            b = tuple(b)
            rest = tuple(x - y for x, y in zip(m, b))
            for beta, cb in self.rules[b].items():
                mm = tuple(x + y for x, y in zip(beta, rest))
                v = work.get(mm, 0) + coef * cb
                if v:
                    work[mm] = v
                else:
                    work.pop(mm, None)


def _split_first(alpha: tuple, size: int) -> tuple[tuple, tuple]:
    # take the first `size` letters of alpha counting from r_1
    b, left = [], size
    for e in alpha:
        take = min(e, left)
        b.append(take)
        left -= take
    b = tuple(b)
    return b, tuple(x - y for x, y in zip(alpha, b))


def _weight(alpha) -> int:
    return sum(i * a for i, a in enumerate(alpha, start=1))


def _eliminate(p: int, q: int, c: tuple) -> dict:
    """Rules for every border monomial, computed weight by weight.

    At weight d the unknowns are the border monomials of weight d. The
    relations are R_d itself and, for each monomial N of degree q+2 and
    weight d, the differences r_i NF(N/r_i) - r_j NF(N/r_j), whose
    ingredients all have lower weight.
    """
    _, residuals = eliminate_s(p, q, c)
    res_by_k = {q + 1 + i: dict(R.items()) for i, R in enumerate(residuals)}
    border_by_w = defaultdict(list)
    for m in monomials_of_degree(p, q + 1):
        border_by_w[_weight(m)].append(m)
    upper_by_w = defaultdict(list)
    for m in monomials_of_degree(p, q + 2):
        upper_by_w[_weight(m)].append(m)

    rules: dict = {}

    def substitute(row: dict, d: int) -> dict:
        out: dict = {}
        for a, v in row.items():
            deg = sum(a)
            if deg <= q or (deg == q + 1 and _weight(a) == d):
                items = ((a, Fraction(1)),)
            elif deg == q + 1 and a in rules:
                items = rules[a].items()
            else:
                raise InvariantViolation(f"monomial {a} escaped the elimination window at weight {d}")
            for b, u in items:
                nv = out.get(b, 0) + v * u
                if nv:
                    out[b] = nv
                else:
                    out.pop(b, None)
        return out

    for d in sorted(border_by_w):
        unknown = border_by_w[d]
        rank = {m: k for k, m in enumerate(unknown)}
        reducer = SparseReducer(lambda col: (0, rank[col]) if col in rank else (1, order_key(col)))
        rows = []
        if d in res_by_k:
            rows.append(res_by_k[d])
        for N in upper_by_w[d]:
            facs = [(i, tuple(N[:i - 1]) + (N[i - 1] - 1,) + tuple(N[i:]))
                    for i in range(1, p + 1) if N[i - 1]]
            for (i, M), (j, M2) in zip(facs, facs[1:]):
                row: dict = {}
                for beta, v in rules[M].items():
                    key = _shift(beta, i)
                    row[key] = row.get(key, 0) + v
                for beta, v in rules[M2].items():
                    key = _shift(beta, j)
                    row[key] = row.get(key, 0) - v
                rows.append(row)
        for row in rows:
            col = reducer.add(substitute(row, d))
            if col is not None and col not in rank:
                raise InvariantViolation(
                    f"relation among basis monomials found at weight {d} (p={p}, q={q})")
        pivots = reducer.pivots
        missing = [m for m in unknown if m not in pivots]
        if missing:
            raise InvariantViolation(
                f"could not express {missing} at weight {d} (p={p}, q={q}); basis would exceed C(p+q,p)")
        for m in unknown:
            rules[m] = {a: -v for a, v in pivots[m].items() if a != m}
    return rules


@lru_cache(maxsize=None)
def _table(p: int, q: int, c: tuple) -> RewriteTable:
    rules = _eliminate(p, q, c)
    table = RewriteTable(p, q, c, MappingProxyType(rules))
    _, residuals = eliminate_s(p, q, c)
    for k, R in enumerate(residuals, start=q + 1):
        if table.reduce(dict(R.items())):
            raise InvariantViolation(f"residual relation R_{k} does not reduce to zero")
    return table


def build_rewrite_table(descriptor: RingDescriptor) -> RewriteTable:
    return _table(descriptor.p, descriptor.q, descriptor.c)


def normal_form(descriptor: RingDescriptor, x, e_part=None, rng: _random.Random | None = None) -> RingElement:
    """Reduce a polynomial in r (plus an optional e-coefficient) to normal form.

    With ``rng`` the rewrite order is randomized; the result must not change.
    """
    table = build_rewrite_table(descriptor)
    parts = []
    for poly in (x, e_part):
        if poly is None:
            parts.append({})
            continue
        if isinstance(poly, Polynomial):
            if poly.nvars != descriptor.p:
                raise ShapeError(f"expected a polynomial in {descriptor.p} variables")
            terms = dict(poly.items())
        else:
            terms = {tuple(a): scalar(v) for a, v in dict(poly).items()}
        parts.append(table.reduce(terms) if rng is None else table.reduce_random(terms, rng))
    return RingElement(descriptor, parts[0], parts[1])


def multiply(a: RingElement, b: RingElement) -> RingElement:
    if not isinstance(b, RingElement) or a.descriptor != b.descriptor:
        raise ShapeError("elements belong to different algebras")
    d = a.descriptor
    table = build_rewrite_table(d)

    def prod(x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for al, u in x.items():
            for be, v in y.items():
                m = tuple(s + t for s, t in zip(al, be))
                out[m] = out.get(m, 0) + u * v
        return table.reduce({m: v for m, v in out.items() if v})

    main = prod(a._coords, b._coords)
    if d.has_e:
        if d.e_square and a._ecoords and b._ecoords:
            main = _add(main, {m: v * d.e_square for m, v in prod(a._ecoords, b._ecoords).items()})
        epart = _add(prod(a._coords, b._ecoords), prod(a._ecoords, b._coords))
    else:
        epart = {}
    return RingElement(d, main, epart)


def basis(descriptor: RingDescriptor) -> list[BasisMonomial]:
    mons = monomials_up_to(descriptor.p, descriptor.q)
    out = [BasisMonomial(m) for m in mons]
    if descriptor.has_e:
        out += [BasisMonomial(m, 1) for m in mons]
    return out


def poincare_polynomial(descriptor: RingDescriptor) -> Polynomial:
    if not descriptor.is_graded:
        raise PreconditionError("Poincare polynomial needs the graded algebra (c = 0)")
    coeffs: dict[int, int] = defaultdict(int)
    for b in basis(descriptor):
        coeffs[descriptor.degree(b.alpha) + (descriptor.e_degree if b.e else 0)] += 1
    return univariate(coeffs)


# evaluation model


def _check_case(descriptor: RingDescriptor, case: WeylCase):
    if (case.p, case.q) != (descriptor.p, descriptor.q):
        raise ShapeError(f"case has blocks ({case.p},{case.q}), algebra has ({descriptor.p},{descriptor.q})")
    if descriptor.has_e:
        raise PreconditionError("evaluation model covers the equal-rank algebras only")
    if tuple(invariant_values(case)) != descriptor.c:
        raise PreconditionError("descriptor c is not t(rho) for this case")


def ev_element(x: RingElement, case: WeylCase) -> EvalVector:
    """Values of an element at the coset points, through r_i -> e_i(first block)."""
    _check_case(x.descriptor, case)
    poly = x.polynomial()
    return EvalVector(tuple(poly.evaluate(generator_values(case, pt)) for pt in coset_points(case)))


def idempotents(descriptor: RingDescriptor, case: WeylCase) -> list[RingElement]:
    """One idempotent per coset point, solving (monomial values) x = indicator."""
    _check_case(descriptor, case)
    mons = [b.alpha for b in basis(descriptor)]
    gens = [generator_values(case, pt) for pt in coset_points(case)]
    vmat = [[Polynomial.monomial(m).evaluate(g) for m in mons] for g in gens]
    inv = inverse(vmat)
    out = []
    for s in range(len(gens)):
        out.append(RingElement(descriptor, {m: inv[k][s] for k, m in enumerate(mons)}))
    return out


@dataclass
class GradedReport:
    ok: bool
    pairs_checked: int
    mismatches: list = field(default_factory=list)
    tails: dict = field(default_factory=dict)


def associated_graded_check(descriptor_c: RingDescriptor, descriptor_0: RingDescriptor) -> GradedReport:
    """Top-degree parts of deformed basis products against graded products."""
    if (descriptor_c.p, descriptor_c.q, descriptor_c.grading_weight, descriptor_c.has_e) != \
            (descriptor_0.p, descriptor_0.q, descriptor_0.grading_weight, descriptor_0.has_e):
        raise ShapeError("descriptors differ in shape")
    if not descriptor_0.is_graded:
        raise PreconditionError("second descriptor must be graded")
    bas = basis(descriptor_c)
    report = GradedReport(True, 0)
    for i, b1 in enumerate(bas):
        for b2 in bas[i:]:
            deg = sum(descriptor_c.degree(b.alpha) + (descriptor_c.e_degree if b.e else 0) for b in (b1, b2))
            x = multiply(RingElement.from_basis(descriptor_c, b1), RingElement.from_basis(descriptor_c, b2))
            y = multiply(RingElement.from_basis(descriptor_0, b1), RingElement.from_basis(descriptor_0, b2))
            top = x.component(deg)
            report.pairs_checked += 1
            if top._coords != y._coords or top._ecoords != y._ecoords:
                report.ok = False
                report.mismatches.append((b1, b2, str(top), str(y)))
            tail = x - top
            if not tail.is_zero():
                report.tails[(b1.label(), b2.label())] = str(tail)
    return report


# determinant recipe, kept as an independent oracle for small p, q


def cramer_rewrite_table(p: int, q: int, c: Sequence) -> dict:
    """Rules for degree-(q+1) monomials from Cramer determinants.

    Monomials are handled in decreasing lexicographic order. For r_{i1} m with i1 the
    smallest index present, the letters of m pick q of the defining
    relations; solving them for s_1..s_q and substituting into relation i1
    gives r_{i1} D + sum_j r_{i1-j} D_j = t_{i1} D, whose leading term is
    the target monomial. Earlier monomials are replaced by their rules.
    """
    if not 1 <= p <= q:
        raise RangeError("need 1 <= p <= q")
    t = [scalar(x) for x in c]
    if len(t) != p + q:
        raise ShapeError(f"c must have {p + q} entries")
    zero = Polynomial.zero(p)
    one = Polynomial.constant(1, p)

    def r(i: int) -> Polynomial:
        if i == 0:
            return one
        if 1 <= i <= p:
            return Polynomial.variable(i, p)
        return zero

    rules: dict = {}
    # lexicographic from r_1^{q+1} down: every other degree-(q+1) term of a
    # relation is then already known
    for mono in sorted(monomials_of_degree(p, q + 1), reverse=True):
        i1 = next(i for i, e in enumerate(mono, start=1) if e)
        smaller = list(mono)
        smaller[i1 - 1] -= 1
        letters = [i for i, e in enumerate(smaller, start=1) for _ in range(e)]
        eqs = [letters[j - 1] + j for j in range(1, q + 1)]
        mat = [[r(k - j) for j in range(1, q + 1)] for k in eqs]
        rhs = [Polynomial.constant(t[k - 1], p) - r(k) for k in eqs]
        D = determinant(mat, one, zero)
        rel = r(i1) * D - D.scale(t[i1 - 1])
        for j in range(1, i1 + 1):
            mj = [row[:j - 1] + [rhs[a]] + row[j:] for a, row in enumerate(mat)]
            rel = rel + r(i1 - j) * determinant(mj, one, zero)
        terms: dict = {}
        for a, v in rel.items():
            if sum(a) > q + 1:
                raise InvariantViolation(f"degree {sum(a)} term in the relation for {mono}")
            src = rules[a].items() if a in rules else ((a, Fraction(1)),)
            for b, u in src:
                nv = terms.get(b, 0) + v * u
                if nv:
                    terms[b] = nv
                else:
                    terms.pop(b, None)
        lead = terms.pop(mono, Fraction(0))
        stray = [a for a in terms if sum(a) > q]
        if not lead or stray:
            raise InvariantViolation(f"determinant relation for {mono} is not triangular: {stray}")
        rules[mono] = {a: -v / lead for a, v in terms.items()}
    return rules


def generic_c(p: int, q: int, seed: int = 0, size: int = 5) -> tuple:
    """A reproducible random rational deformation vector."""
    rng = _random.Random(seed)
    return tuple(Fraction(rng.randint(-size, size), rng.randint(1, size)) for _ in range(p + q))


def elements_of(descriptor: RingDescriptor, polys: Iterable[Polynomial]) -> list[RingElement]:
    return [normal_form(descriptor, f) for f in polys]
