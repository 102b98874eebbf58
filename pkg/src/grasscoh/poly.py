"""Exact rational scalars and sparse multivariate polynomials.

Scalars are :class:`fractions.Fraction`, which already keeps lowest terms
with a positive denominator. Polynomials map exponent tuples to nonzero
scalars. Every exponent tuple has length ``nvars``.

The monomial order used everywhere is total degree first, then reverse
lexicographic inside a degree, with ``x1 > x2 > ... > xn``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, RangeError, ShapeError

Scalar = Fraction
MultiIndex = tuple  # tuple[int, ...]


def scalar(x) -> Fraction:
    """Coerce ints, Fractions and "a/b" strings. Floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational number: {x!r}") from exc
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a Fraction or 'a/b' string")
    try:
        return Fraction(x)
    except TypeError as exc:
        raise TypeError(f"cannot convert {type(x).__name__} to a rational") from exc


def rational_str(x: Fraction) -> str:
    """Always "num/den", also for integers. Used by machine formats."""
    x = scalar(x)
    return f"{x.numerator}/{x.denominator}"


def trim_index(alpha: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing zeros, giving the canonical key of a multi-index."""
    alpha = tuple(alpha)
    end = len(alpha)
    while end and alpha[end - 1] == 0:
        end -= 1
    return alpha[:end]


def pad_index(alpha: Sequence[int], n: int) -> tuple[int, ...]:
    alpha = tuple(alpha)
    if len(trim_index(alpha)) > n:
        raise ShapeError(f"multi-index {alpha} does not fit in {n} variables")
    return (alpha + (0,) * n)[:n]


def order_key(alpha: Sequence[int]):
    """Sort key for the library monomial order (larger key = larger monomial)."""
    return (sum(alpha), tuple(-a for a in reversed(alpha)))


def basis_key(alpha: Sequence[int]):
    """Display order of bases: degree ascending, largest monomial first inside a degree."""
    return (sum(alpha), tuple(reversed(alpha)))


def monomials_of_degree(n: int, d: int) -> list[tuple[int, ...]]:
    """All exponent tuples of length n and total degree d, largest first."""
    if n == 0:
        return [()] if d == 0 else []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for a in range(left, -1, -1):
            rec(prefix + (a,), left - a, slots - 1)

    rec((), d, n)
    out.sort(key=order_key, reverse=True)
    return out


def monomials_up_to(n: int, d: int) -> list[tuple[int, ...]]:
    """Monomials of degree <= d in basis display order."""
    out = []
    for k in range(d + 1):
        out.extend(sorted(monomials_of_degree(n, k), key=basis_key))
    return out


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable | None = None):
        if nvars < 0:
            raise RangeError("variable count must be nonnegative")
        self.nvars = nvars
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for alpha, c in items:
                alpha = tuple(alpha)
                if len(alpha) != nvars:
                    raise ShapeError(f"exponent {alpha} has length {len(alpha)}, expected {nvars}")
                if any(a < 0 for a in alpha):
                    raise RangeError(f"negative exponent in {alpha}")
                c = scalar(c)
                if c:
                    c = clean.get(alpha, 0) + c
                    if c:
                        clean[alpha] = c
                    else:
                        clean.pop(alpha, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        # trusted constructor: keys have the right length, values are nonzero Fractions
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    # construction helpers

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        c = scalar(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        """The i-th variable, 1-based."""
        if not 1 <= i <= nvars:
            raise RangeError(f"variable index {i} out of range 1..{nvars}")
        alpha = [0] * nvars
        alpha[i - 1] = 1
        return cls._raw(nvars, {tuple(alpha): Fraction(1)})

    @classmethod
    def monomial(cls, alpha: Sequence[int], coef=1, nvars: int | None = None) -> "Polynomial":
        n = len(alpha) if nvars is None else nvars
        return cls(n, {pad_index(alpha, n): coef})

    # read access

    @property
    def terms(self) -> Mapping[tuple[int, ...], Fraction]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self._terms.get(pad_index(alpha, self.nvars), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(a) for a in self._terms), default=-1)

    def weighted_degree(self, weights: Sequence[int]) -> int:
        return max((sum(w * a for w, a in zip(weights, alpha)) for alpha in self._terms), default=-1)

    def component(self, weights: Sequence[int], d: int) -> "Polynomial":
        """The part of weighted degree exactly d."""
        return Polynomial._raw(
            self.nvars,
            {a: c for a, c in self._terms.items() if sum(w * e for w, e in zip(weights, a)) == d},
        )

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms from the largest monomial down."""
        return sorted(self._terms.items(), key=lambda t: order_key(t[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            return None
        return max(self._terms.items(), key=lambda t: order_key(t[0]))

    # arithmetic

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ShapeError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(scalar(other), self.nvars)

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        out = dict(self._terms)
        for a, c in other._terms.items():
            v = out.get(a, 0) + c
            if v:
                out[a] = v
            else:
                out.pop(a, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = scalar(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {a: v * c for a, v in self._terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                m = tuple(x + y for x, y in zip(a, b))
                v = out.get(m, 0) + c * d
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise RangeError("negative powers are not polynomials")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ShapeError(f"point has {len(point)} coordinates, expected {self.nvars}")
        pt = [scalar(v) for v in point]
        total = Fraction(0)
        for alpha, c in self._terms.items():
            v = c
            for x, e in zip(pt, alpha):
                if e:
                    v *= x ** e
            total += v
        return total

    def substitute(self, i: int, value: "Polynomial") -> "Polynomial":
        """Replace variable i (1-based) by a polynomial in the same variables."""
        if not 1 <= i <= self.nvars:
            raise RangeError(f"variable index {i} out of range 1..{self.nvars}")
        value = self._coerce(value)
        powers = {0: Polynomial.constant(1, self.nvars)}
        out = Polynomial.zero(self.nvars)
        for alpha, c in self._terms.items():
            e = alpha[i - 1]
            if e not in powers:
                powers[e] = value ** e
            rest = list(alpha)
            rest[i - 1] = 0
            out = out + Polynomial._raw(self.nvars, {tuple(rest): c}) * powers[e]
        return out

    def compose(self, values: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute every variable at once. All values must share a variable count."""
        if len(values) != self.nvars:
            raise ShapeError(f"need {self.nvars} substitutions, got {len(values)}")
        if not values:
            return self
        m = values[0].nvars
        out = Polynomial.zero(m)
        for alpha, c in self._terms.items():
            term = Polynomial.constant(c, m)
            for v, e in zip(values, alpha):
                if e:
                    term = term * (v ** e)
            out = out + term
        return out

    def extend(self, nvars: int) -> "Polynomial":
        """Same polynomial viewed in more variables."""
        if nvars < self.nvars:
            raise ShapeError("cannot shrink the variable count")
        pad = (0,) * (nvars - self.nvars)
        return Polynomial._raw(nvars, {a + pad: c for a, c in self._terms.items()})

    # comparison and hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # text

    def to_string(self, var: str = "x") -> str:
        return format_terms(self.sorted_terms(), var)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.to_string()!r})"


def format_monomial(alpha: Sequence[int], var: str = "x") -> str:
    parts = []
    for i, e in enumerate(alpha, start=1):
        if e == 1:
            parts.append(f"{var}{i}")
        elif e > 1:
            parts.append(f"{var}{i}^{e}")
    return "*".join(parts) if parts else "1"


def format_terms(terms: Iterable, var: str = "x") -> str:
    """Render (alpha, coef) pairs in the given order, e.g. '3*r1^2*r2 - r2^2'."""
    out = []
    for alpha, c in terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = format_monomial(alpha, var)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out) if out else "0"


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^([A-Za-z_]+)(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str, nvars: int, var: str = "x") -> Polynomial:
    """Inverse of :meth:`Polynomial.to_string`. Accepts any term order."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    if s == "0":
        return Polynomial.zero(nvars)
    if s[0] not in "+-":
        s = "+" + s
    pieces = _TERM_SPLIT.split(s)
    # split keeps separators: ['', sign, term, sign, term, ...]
    if pieces[0].strip():
        raise ParseError(f"cannot parse {text!r}")
    terms: dict[tuple[int, ...], Fraction] = {}
    for k in range(1, len(pieces), 2):
        sign, body = pieces[k], pieces[k + 1].strip()
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        coef = Fraction(1)
        alpha = [0] * nvars
        for factor in body.split("*"):
            factor = factor.strip()
            m = _FACTOR.match(factor)
            if m:
                if m.group(1) != var:
                    raise ParseError(f"unknown variable {factor!r} (expected prefix {var!r})")
                i = int(m.group(2))
                if not 1 <= i <= nvars:
                    raise ParseError(f"variable {factor!r} out of range 1..{nvars}")
                alpha[i - 1] += int(m.group(3) or 1)
            else:
                try:
                    coef *= Fraction(factor)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"bad factor {factor!r} in {text!r}") from exc
        if sign == "-":
            coef = -coef
        key = tuple(alpha)
        v = terms.get(key, 0) + coef
        if v:
            terms[key] = v
        else:
            terms.pop(key, None)
    return Polynomial._raw(nvars, terms)


def elementary_symmetric(k: int, values_or_vars):
    """e_k as a polynomial in n variables (int argument) or its value at a point."""
    if isinstance(values_or_vars, int):
        n = values_or_vars
        if not 0 <= k <= n:
            raise RangeError(f"e_{k} undefined in {n} variables")
        terms = {}
        for idx in combinations(range(n), k):
            alpha = [0] * n
            for i in idx:
                alpha[i] = 1
            terms[tuple(alpha)] = Fraction(1)
        return Polynomial._raw(n, terms)
    point = [scalar(v) for v in values_or_vars]
    n = len(point)
    if not 0 <= k <= n:
        raise RangeError(f"e_{k} undefined at a point with {n} coordinates")
    # e[j] after processing a prefix of the point
    e = [Fraction(1)] + [Fraction(0)] * k
    for x in point:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * x
    return e[k]


def elementary_symmetric_squares(k: int, point: Sequence) -> Fraction:
    """Value of e_k(x_1^2, ..., x_n^2)."""
    return elementary_symmetric(k, [scalar(v) ** 2 for v in point])


def poly_divide_univariate(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder of one-variable polynomials."""
    if num.nvars != 1 or den.nvars != 1:
        raise ShapeError("univariate division needs one-variable polynomials")
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = {a[0]: c for a, c in num.items()}
    dd = den.degree()
    lead = den.coefficient((dd,))
    q: dict[int, Fraction] = {}
    while n:
        top = max(n)
        if top < dd:
            break
        f = n[top] / lead
        q[top - dd] = f
        for (e,), c in den.items():
            k = e + top - dd
            v = n.get(k, 0) - f * c
            if v:
                n[k] = v
            else:
                n.pop(k, None)
    return (Polynomial(1, {(e,): c for e, c in q.items()}),
            Polynomial(1, {(e,): c for e, c in n.items()}))


def univariate(coeffs: Mapping[int, object]) -> Polynomial:
    """Build a polynomial in t from {exponent: coefficient}."""
    return Polynomial(1, {(e,): c for e, c in coeffs.items()})


def is_palindromic(poly: Polynomial) -> bool:
    """Coefficients read the same from both ends (one variable)."""
    if poly.is_zero():
        return True
    top = poly.degree()
    low = min(a[0] for a in poly.terms)
    return all(poly.coefficient((low + top - e,)) == c for (e,), c in poly.items())
