"""Schur polynomials in the p x q box, expressed in the r-monomials.

s_lambda = det(r_{lambda^t_i - i + j}) with r_0 = 1 and r_k = 0 outside
1..p. The leading monomial of s_lambda is the diagonal product, so the
transition matrix to the monomial basis is unitriangular.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .errors import ParseError, PreconditionError, RangeError
from .hpq import RingDescriptor, normal_form
from .linalg import determinant
from .poly import Polynomial, monomials_up_to, order_key, rational_str, scalar


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise RangeError(f"{parts} is not a partition")
        object.__setattr__(self, "parts", tuple(x for x in parts if x))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0])))

    def fits(self, p: int, q: int) -> bool:
        return len(self.parts) <= p and (not self.parts or self.parts[0] <= q)

    def padded(self, p: int) -> tuple[int, ...]:
        return self.parts + (0,) * (p - len(self.parts))

    def format(self, p: int | None = None) -> str:
        parts = self.padded(p) if p is not None else self.parts
        return "(" + ",".join(map(str, parts)) + ")"

    def __str__(self) -> str:
        return self.format()

    def diagonal_monomial(self, p: int) -> tuple[int, ...]:
        """Exponents of r_{lambda^t_1} r_{lambda^t_2} ...: alpha_j = lambda_j - lambda_{j+1}."""
        lam = self.padded(p) + (0,)
        return tuple(lam[j] - lam[j + 1] for j in range(p))


def parse_partition(text: str) -> Partition:
    s = text.strip()
    m = re.fullmatch(r"\(?\s*([\d\s,]*)\)?", s)
    if not m:
        raise ParseError(f"not a partition: {text!r}")
    body = m.group(1).strip()
    if not body:
        return Partition(())
    try:
        return Partition(tuple(int(x) for x in body.split(",") if x.strip()))
    except ValueError as exc:
        raise ParseError(f"not a partition: {text!r}") from exc


def box_partitions(p: int, q: int) -> list[Partition]:
    """Partitions in the box, listed in the basis order of their diagonal monomials."""
    out = []

    def rec(prefix, cap, left):
        if left == 0:
            out.append(Partition(tuple(prefix)))
            return
        for x in range(cap, -1, -1):
            rec(prefix + [x], x, left - 1)

    rec([], q, p)
    by_mono = {lam.diagonal_monomial(p): lam for lam in out}
    return [by_mono[m] for m in monomials_up_to(p, q)]


def _check_box(lam: Partition, p: int, q: int):
    if not lam.fits(p, q):
        raise RangeError(f"partition {lam} is outside the {p}x{q} box")


def jacobi_trudi(lam: Partition, p: int, q: int) -> Polynomial:
    _check_box(lam, p, q)
    lt = lam.transpose().parts
    one = Polynomial.constant(1, p)
    zero = Polynomial.zero(p)

    def r(k: int) -> Polynomial:
        if k == 0:
            return one
        if 1 <= k <= p:
            return Polynomial.variable(k, p)
        return zero

    n = len(lt)
    mat = [[r(lt[i] - (i + 1) + (j + 1)) for j in range(n)] for i in range(n)]
    return determinant(mat, one, zero)


@dataclass(frozen=True)
class TransitionMatrix:
    """Rows indexed by ``rows``, columns by ``cols``.

    Both index lists are sorted in increasing monomial order (partitions by
    their diagonal monomial), which makes the Schur-to-monomial matrix lower
    unitriangular.
    """

    rows: tuple
    cols: tuple
    entries: tuple

    def row(self, key) -> dict:
        i = self.rows.index(key)
        return {c: v for c, v in zip(self.cols, self.entries[i]) if v}

    def is_unitriangular(self) -> bool:
        n = len(self.rows)
        return all(self.entries[i][i] == 1 and not any(self.entries[i][i + 1:]) for i in range(n))


def transition_matrices(p: int, q: int) -> tuple[TransitionMatrix, TransitionMatrix]:
    """(Schur -> monomial, monomial -> Schur)."""
    lams = sorted(box_partitions(p, q), key=lambda lam: order_key(lam.diagonal_monomial(p)))
    mons = [lam.diagonal_monomial(p) for lam in lams]
    pos = {m: k for k, m in enumerate(mons)}
    n = len(mons)
    mat = []
    for lam in lams:
        row = [Fraction(0)] * n
        for alpha, c in jacobi_trudi(lam, p, q).items():
            row[pos[alpha]] = c
        mat.append(row)
    # forward substitution on the lower unitriangular matrix
    inv = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        if mat[i][i] != 1 or any(mat[i][i + 1:]):
            raise PreconditionError("Jacobi-Trudi matrix is not unitriangular")
        inv[i][i] = Fraction(1)
        for j in range(i):
            inv[i][j] = -sum((mat[i][k] * inv[k][j] for k in range(j, i)), Fraction(0))
    fwd = TransitionMatrix(tuple(lams), tuple(mons), tuple(tuple(r) for r in mat))
    back = TransitionMatrix(tuple(mons), tuple(lams), tuple(tuple(r) for r in inv))
    return fwd, back


_INV_CACHE: dict = {}


def to_schur(coords: Mapping, p: int, q: int) -> dict:
    """Convert monomial coordinates (basis monomials only) to Schur coordinates."""
    key = (p, q)
    if key not in _INV_CACHE:
        _INV_CACHE[key] = transition_matrices(p, q)[1]
    back = _INV_CACHE[key]
    out: dict = {}
    for alpha, c in coords.items():
        for lam, v in back.row(tuple(alpha)).items():
            out[lam] = out.get(lam, 0) + c * v
    return {lam: v for lam, v in out.items() if v}


def schur_multiply(lam: Partition, mu: Partition, descriptor: RingDescriptor) -> dict:
    p, q = descriptor.p, descriptor.q
    if not descriptor.is_graded or descriptor.has_e:
        raise PreconditionError("Schur products need the graded algebra without e")
    _check_box(lam, p, q)
    _check_box(mu, p, q)
    prod = jacobi_trudi(lam, p, q) * jacobi_trudi(mu, p, q)
    x = normal_form(descriptor, prod)
    return to_schur(x.coords, p, q)


def pieri_oracle(lam: Partition, k: int, p: int, q: int) -> dict:
    """Sum of s_mu over mu = lam plus a vertical k-strip, kept inside the box."""
    if not 1 <= k <= p:
        raise RangeError(f"k must be in 1..{p}")
    _check_box(lam, p, q)
    base = list(lam.padded(p))
    out = {}
    for rows in combinations(range(p), k):
        mu = list(base)
        for i in rows:
            mu[i] += 1
        if any(a < b for a, b in zip(mu, mu[1:])) or mu[0] > q:
            continue
        out[Partition(tuple(mu))] = Fraction(1)
    return out


def schur_vector_json(vec: Mapping, p: int | None = None) -> str:
    items = sorted(vec.items(), key=lambda t: order_key(t[0].diagonal_monomial(p or len(t[0]))))
    return json.dumps({lam.format(p): rational_str(v) for lam, v in items})


def format_schur(vec: Mapping, p: int) -> str:
    if not vec:
        return "0"
    items = sorted(vec.items(), key=lambda t: order_key(t[0].diagonal_monomial(p)), reverse=True)
    out = []
    for lam, c in items:
        c = scalar(c)
        name = f"s_{lam.format(p)}"
        mag = abs(c)
        body = name if mag == 1 else f"{mag}*{name}"
        if not out:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(f" {'+' if c > 0 else '-'} {body}")
    return "".join(out)


def from_schur(vec: Mapping, p: int, q: int) -> Polynomial:
    total = Polynomial.zero(p)
    for lam, c in vec.items():
        total = total + jacobi_trudi(lam, p, q).scale(c)
    return total


def schur_of(text: Sequence[int] | str) -> Partition:
    return parse_partition(text) if isinstance(text, str) else Partition(tuple(text))
