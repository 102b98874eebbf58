"""Weyl-group combinatorics for the evaluation model.

Each deformable case is described by a :class:`WeylCase`. The points of the
orbit model are the images of rho under coset representatives: shuffles for
the two-block cases, sign changes for the Lagrangian-type cases.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .errors import PreconditionError, RangeError, UnsupportedCase
from .poly import Polynomial, elementary_symmetric, rational_str, scalar

# case ids shared with the catalog
U_PQ = "U(p+q)/U(p)xU(q)"
SP_PQ = "Sp(p+q)/Sp(p)xSp(q)"
SO_EVEN_EVEN = "SO(2p+2q)/S(O(2p)xO(2q))"
SO_EVEN_ODD = "SO(2p+2q+1)/S(O(2p)xO(2q+1))"
SO_ODD_ODD = "SO(2p+2q+2)/S(O(2p+1)xO(2q+1))"
SP_U = "Sp(n)/U(n)"
SO_U = "SO(2n)/U(n)"

# family tags: A = S_p x S_q in S_n; B = B_p x B_q in B_n;
# SBxB = S(B_p x B_q) in D_n; C/A and D/A = S_n in B_n or D_n
_FAMILY = {
    U_PQ: "A",
    SP_PQ: "B",
    SO_EVEN_EVEN: "SBxB",
    SO_EVEN_ODD: "B",
    SO_ODD_ODD: "B",
    SP_U: "C/A",
    SO_U: "D/A",
}

TWO_BLOCK_CASES = (U_PQ, SP_PQ, SO_EVEN_EVEN, SO_EVEN_ODD, SO_ODD_ODD)
SIGN_CASES = (SP_U, SO_U)


@dataclass(frozen=True)
class WeylCase:
    case_id: str
    p: int = 0
    q: int = 0
    n: int = 0

    def __post_init__(self):
        if self.case_id not in _FAMILY:
            raise UnsupportedCase(f"no Weyl data for case {self.case_id!r}")
        if self.case_id in TWO_BLOCK_CASES:
            if self.p < 1 or self.q < 1:
                raise RangeError("two-block cases need p, q >= 1")
            object.__setattr__(self, "n", self.p + self.q)
        elif self.n < 1:
            raise RangeError("n must be at least 1")

    @property
    def family(self) -> str:
        return _FAMILY[self.case_id]

    @property
    def squares(self) -> bool:
        """Whether invariants are symmetric in the squared coordinates."""
        return self.family not in ("A", "C/A", "D/A")

    @classmethod
    def two_block(cls, case_id: str, p: int, q: int) -> "WeylCase":
        return cls(case_id, p=p, q=q)

    @classmethod
    def rank(cls, case_id: str, n: int) -> "WeylCase":
        return cls(case_id, n=n)


@dataclass(frozen=True)
class Shuffle:
    """The p positions (1-based, increasing) that go to the first block."""
    subset: tuple[int, ...]
    total: int

    def __post_init__(self):
        s = self.subset
        if any(b <= a for a, b in zip(s, s[1:])) or (s and (s[0] < 1 or s[-1] > self.total)):
            raise RangeError(f"invalid shuffle {s} of {self.total}")

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.subset)) + "}"


@dataclass(frozen=True)
class RhoVector:
    coordinates: tuple[Fraction, ...]

    def __iter__(self):
        return iter(self.coordinates)

    def __len__(self):
        return len(self.coordinates)


@dataclass(frozen=True)
class EvalVector:
    values: tuple[Fraction, ...]

    def __mul__(self, other: "EvalVector") -> "EvalVector":
        return EvalVector(tuple(a * b for a, b in zip(self.values, other.values)))

    def to_json(self) -> str:
        return json.dumps([rational_str(v) for v in self.values])

    @classmethod
    def from_json(cls, text: str) -> "EvalVector":
        return cls(tuple(scalar(s) for s in json.loads(text)))


def enumerate_shuffles(p: int, q: int) -> list[Shuffle]:
    """All (p,q)-shuffles, lexicographic on subsets."""
    if p < 1 or q < 1:
        raise RangeError("p and q must be at least 1")
    return [Shuffle(s, p + q) for s in combinations(range(1, p + q + 1), p)]


def shuffle_apply(sh: Shuffle, v: Sequence) -> tuple:
    if len(v) != sh.total:
        raise RangeError(f"shuffle of {sh.total} applied to a vector of length {len(v)}")
    chosen = set(sh.subset)
    first = [v[i - 1] for i in sh.subset]
    rest = [v[i - 1] for i in range(1, sh.total + 1) if i not in chosen]
    return tuple(first + rest)


def sign_changes(n: int, even: bool) -> list[tuple[int, ...]]:
    """Sign patterns, lexicographic with +1 before -1; optionally only even ones."""
    pats = [s for s in product((1, -1), repeat=n)]
    if even:
        pats = [s for s in pats if s.count(-1) % 2 == 0]
    return pats


def _rho_coords(case: WeylCase) -> list[Fraction]:
    n = case.n
    cid = case.case_id
    if cid == U_PQ:
        # half-sum of positive roots of U(n)
        return [Fraction(n - 1 - 2 * i, 2) for i in range(n)]
    if cid in (SP_PQ, SO_ODD_ODD, SP_U):
        return [Fraction(n - i) for i in range(n)]
    if cid in (SO_EVEN_EVEN, SO_U):
        return [Fraction(n - 1 - i) for i in range(n)]
    if cid == SO_EVEN_ODD:
        return [Fraction(2 * (n - i) - 1, 2) for i in range(n)]
    raise UnsupportedCase(f"no rho for {cid!r}")


def coset_points(case: WeylCase, nu: Sequence | None = None) -> list[tuple[Fraction, ...]]:
    """Images of nu (default rho) under the ordered coset representatives."""
    pt = tuple(scalar(x) for x in (nu if nu is not None else _rho_coords(case)))
    if len(pt) != case.n:
        raise RangeError(f"point has {len(pt)} coordinates, case needs {case.n}")
    if case.case_id in TWO_BLOCK_CASES:
        return [shuffle_apply(sh, pt) for sh in enumerate_shuffles(case.p, case.q)]
    even = case.case_id == SO_U
    return [tuple(s * x for s, x in zip(sg, pt)) for sg in _sign_reps(case.n, even, pt)]


def _sign_reps(n: int, even: bool, pt) -> list[tuple[int, ...]]:
    pats = sign_changes(n, even)
    if not even:
        return pats
    # D_n / S_n: flipping a zero coordinate changes nothing, so keep the
    # first pattern giving each distinct point
    seen, out = set(), []
    for sg in pats:
        img = tuple(s * x for s, x in zip(sg, pt))
        if img not in seen:
            seen.add(img)
            out.append(sg)
    return out


def rho_vector(case: WeylCase) -> RhoVector:
    """Deformation point for the case; checks the coset images are distinct."""
    coords = _rho_coords(case)
    rho = RhoVector(tuple(coords))
    pts = [generator_values(case, x) for x in coset_points(case, coords)]
    if len(set(pts)) != len(pts):
        raise PreconditionError(f"rho for {case.case_id} does not separate coset points")
    return rho


def generator_values(case: WeylCase, point: Sequence) -> tuple[Fraction, ...]:
    """Values of the ring generators r_1.. at a point of the orbit."""
    pt = [scalar(x) for x in point]
    if case.case_id in TWO_BLOCK_CASES:
        block = pt[:case.p]
        if case.squares:
            block = [x * x for x in block]
        return tuple(elementary_symmetric(i, block) for i in range(1, case.p + 1))
    m = case.n if case.case_id == SP_U else case.n - 1
    return tuple(elementary_symmetric(i, pt) for i in range(1, m + 1))


def invariant_values(case: WeylCase, nu: Sequence | None = None) -> tuple[Fraction, ...]:
    """The deformation constants t_k(nu), k = 1..n.

    Two-block cases use e_k of the coordinates (type A) or of their squares.
    The Lagrangian cases use e_k of the squares; for SO(2n)/U(n) the last
    entry is replaced by the Pfaffian-type invariant e_n of the coordinates.
    """
    pt = [scalar(x) for x in (nu if nu is not None else _rho_coords(case))]
    sq = [x * x for x in pt]
    n = case.n
    if case.family == "A":
        return tuple(elementary_symmetric(k, pt) for k in range(1, n + 1))
    vals = [elementary_symmetric(k, sq) for k in range(1, n + 1)]
    if case.case_id == SO_U:
        vals[-1] = elementary_symmetric(n, pt)
    return tuple(vals)


def _symmetries(case: WeylCase) -> list:
    """Generators of W_K acting on coordinates, as functions point -> point."""
    n = case.n
    gens = []

    def swap(i):
        return lambda v: v[:i] + (v[i + 1], v[i]) + v[i + 2:]

    def flip(*idx):
        return lambda v: tuple(-x if k in idx else x for k, x in enumerate(v))

    if case.case_id in TWO_BLOCK_CASES:
        p = case.p
        gens += [swap(i) for i in range(n - 1) if i != p - 1]
        if case.family == "B":
            gens += [flip(0), flip(p)]
        elif case.family == "SBxB":
            gens += [flip(0, p)]
    else:
        gens += [swap(i) for i in range(n - 1)]
    return gens


def _permute_poly(f: Polynomial, g) -> Polynomial:
    # apply a signed coordinate permutation to the variables of f
    n = f.nvars
    idx = tuple(range(1, n + 1))
    img = g(idx)
    out = {}
    for alpha, c in f.items():
        beta = [0] * n
        sign = 1
        for pos, v in enumerate(img):
            # f(g x) has y_pos = +-x_|v|
            e = alpha[pos]
            beta[abs(v) - 1] = e
            if v < 0 and e % 2:
                sign = -sign
        out[tuple(beta)] = sign * c
    return Polynomial(n, out)


def is_invariant(f: Polynomial, case: WeylCase) -> bool:
    if f.nvars != case.n:
        raise RangeError(f"polynomial has {f.nvars} variables, case needs {case.n}")
    return all(_permute_poly(f, g) == f for g in _symmetries(case))


def ev_map(f: Polynomial, nu: RhoVector | Sequence, case: WeylCase, check: bool = True) -> EvalVector:
    """Values of a W_K-invariant polynomial on the coset points of nu."""
    if check and not is_invariant(f, case):
        raise PreconditionError("polynomial is not invariant under W_K")
    coords = tuple(nu)
    return EvalVector(tuple(f.evaluate(x) for x in coset_points(case, coords)))
