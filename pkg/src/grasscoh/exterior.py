"""Exterior algebras on odd generators g_1..g_m of prescribed degrees.

Basis elements are increasing index tuples. In Clifford mode distinct
generators still anticommute but g_i^2 equals a configurable scalar.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import RangeError, ShapeError, UnsupportedCase
from .poly import Polynomial, scalar, univariate

GROUP_SO_ODD = "group O(2n+1)"
GROUP_SO_EVEN = "group O(2n)"
GROUP_U = "group U(n)"
GROUP_SP = "group Sp(n)"
U_O = "U(m)/O(m)"
U_SP = "U(2n)/Sp(n)"

EXTERIOR_CASES = (GROUP_SO_ODD, GROUP_SO_EVEN, GROUP_U, GROUP_SP, U_O, U_SP)
GROUP_CASES = (GROUP_SO_ODD, GROUP_SO_EVEN, GROUP_U, GROUP_SP)


def degree_list(case_id: str, n: int) -> tuple[int, ...]:
    """Degrees of the primitive generators, from the table of degrees."""
    if n < 0:
        raise RangeError("size parameter must be nonnegative")
    if case_id == GROUP_SO_ODD:
        return tuple(4 * p - 1 for p in range(1, n + 1))
    if case_id == GROUP_SO_EVEN:
        if n == 0:
            return ()
        return tuple(4 * p - 1 for p in range(1, n)) + (2 * n - 1,)
    if case_id == GROUP_U:
        return tuple(2 * p - 1 for p in range(1, n + 1))
    if case_id == GROUP_SP:
        return tuple(4 * p - 1 for p in range(1, n + 1))
    if case_id == U_O:
        return tuple(4 * p - 3 for p in range(1, (n + 1) // 2 + 1))
    if case_id == U_SP:
        return tuple(4 * p - 3 for p in range(1, n + 1))
    raise UnsupportedCase(f"no exterior model for {case_id!r}")


@dataclass(frozen=True)
class ExteriorDescriptor:
    case_id: str
    n: int
    degrees: tuple
    clifford: bool = False
    square: Fraction = Fraction(1)
    unverified: bool = False

    def __post_init__(self):
        degs = tuple(int(d) for d in self.degrees)
        if any(d <= 0 or d % 2 == 0 for d in degs):
            raise RangeError("generator degrees must be positive and odd")
        object.__setattr__(self, "degrees", degs)
        object.__setattr__(self, "square", scalar(self.square))

    @property
    def m(self) -> int:
        return len(self.degrees)

    @property
    def dim(self) -> int:
        return 2 ** self.m

    @property
    def is_graded(self) -> bool:
        return not self.clifford

    def degree(self, subset: Sequence[int]) -> int:
        return sum(self.degrees[i - 1] for i in subset)

    def to_dict(self) -> dict:
        d = {"family": "exterior", "case": self.case_id, "n": self.n, "degrees": list(self.degrees)}
        if self.clifford:
            d["clifford_square"] = f"{self.square.numerator}/{self.square.denominator}"
            d["unverified"] = self.unverified
        return d

    def __str__(self) -> str:
        s = f"exterior algebra for {self.case_id} (n={self.n}), degrees {list(self.degrees)}"
        if self.clifford:
            s += f", Clifford with g_i^2 = {self.square}"
            if self.unverified:
                s += " [unverified]"
        return s


def exterior_descriptor(case_id: str, n: int) -> ExteriorDescriptor:
    return ExteriorDescriptor(case_id, n, degree_list(case_id, n))


class ExteriorElement:
    __slots__ = ("descriptor", "_coords")

    def __init__(self, descriptor: ExteriorDescriptor, coords: Mapping | None = None):
        self.descriptor = descriptor
        clean = {}
        for s, v in (coords or {}).items():
            s = tuple(s)
            if any(b <= a for a, b in zip(s, s[1:])) or any(not 1 <= i <= descriptor.m for i in s):
                raise ShapeError(f"{s} is not an increasing subset of 1..{descriptor.m}")
            v = scalar(v)
            if v:
                clean[s] = v
        self._coords = clean

    @property
    def coords(self) -> Mapping:
        return MappingProxyType(self._coords)

    @classmethod
    def one(cls, d: ExteriorDescriptor) -> "ExteriorElement":
        return cls(d, {(): 1})

    @classmethod
    def generator(cls, d: ExteriorDescriptor, i: int) -> "ExteriorElement":
        if not 1 <= i <= d.m:
            raise RangeError(f"g{i} is not a generator")
        return cls(d, {(i,): 1})

    def __add__(self, other: "ExteriorElement") -> "ExteriorElement":
        if not isinstance(other, ExteriorElement) or other.descriptor != self.descriptor:
            raise ShapeError("elements belong to different algebras")
        out = dict(self._coords)
        for k, v in other._coords.items():
            out[k] = out.get(k, 0) + v
        return ExteriorElement(self.descriptor, out)

    def scale(self, c) -> "ExteriorElement":
        c = scalar(c)
        return ExteriorElement(self.descriptor, {k: v * c for k, v in self._coords.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return wedge(self, other)

    def vector(self) -> list[Fraction]:
        return [self._coords.get(b, Fraction(0)) for b in basis_ext(self.descriptor)]

    def is_zero(self) -> bool:
        return not self._coords

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        return self.descriptor == other.descriptor and self._coords == other._coords

    def __hash__(self):
        return hash((self.descriptor, frozenset(self._coords.items())))

    def __str__(self) -> str:
        items = sorted(self._coords.items(), key=lambda t: (len(t[0]), t[0]), reverse=True)
        out = []
        for s, c in items:
            name = format_wedge(s)
            mag = abs(c)
            body = name if mag == 1 and s else (str(mag) if not s else f"{mag}*{name}")
            out.append(("-" if c < 0 else "") + body if not out else f" {'-' if c < 0 else '+'} {body}")
        return "".join(out) if out else "0"

    def __repr__(self):
        return f"ExteriorElement({str(self)!r})"


def format_wedge(subset: Sequence[int]) -> str:
    return "^".join(f"g{i}" for i in subset) if subset else "1"


def _merge(a: tuple, b: tuple, square: Fraction | None):
    """g_a * g_b = coef * g_merged. ``square`` None means g_i^2 = 0."""
    # each element of b moves left past the larger elements of a
    inv = sum(1 for x in a for y in b if y < x)
    common = set(a) & set(b)
    if common and square is None:
        return None, Fraction(0)
    coef = Fraction(-1 if inv % 2 else 1)
    if common:
        coef *= square ** len(common)
    return tuple(sorted(set(a) ^ set(b))), coef


def wedge(a: ExteriorElement, b: ExteriorElement) -> ExteriorElement:
    if not isinstance(b, ExteriorElement) or a.descriptor != b.descriptor:
        raise ShapeError("elements belong to different algebras")
    d = a.descriptor
    square = d.square if d.clifford else None
    out: dict = defaultdict(Fraction)
    for s, u in a.coords.items():
        for t, v in b.coords.items():
            m, c = _merge(s, t, square)
            if m is not None and c:
                out[m] += u * v * c
    return ExteriorElement(d, {k: v for k, v in out.items() if v})


def basis_ext(descriptor: ExteriorDescriptor) -> list[tuple[int, ...]]:
    m = descriptor.m
    return [s for k in range(m + 1) for s in combinations(range(1, m + 1), k)]


def poincare_ext(descriptor: ExteriorDescriptor) -> Polynomial:
    coeffs: dict[int, int] = defaultdict(int)
    for s in basis_ext(descriptor):
        coeffs[descriptor.degree(s)] += 1
    return univariate(coeffs)
