"""Exact Gauss-Jordan elimination over the rationals.

Two entry points: a sparse incremental row reducer keyed by arbitrary
hashable column labels, and dense solve/inverse for small square systems.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Sequence

from .errors import InvariantViolation, ShapeError


class SparseReducer:
    """Incremental reduced row echelon form.

    ``priority(col)`` returns a sort key; among the columns present in a new
    row, the one with the smallest key becomes its pivot. Pivot rows are kept
    fully reduced, so each one mentions no other pivot column.
    """

    def __init__(self, priority: Callable[[Hashable], object]):
        self.priority = priority
        self.pivots: dict[Hashable, dict[Hashable, Fraction]] = {}
        # column -> pivot columns whose rows may contain it
        self._uses: dict[Hashable, set] = {}

    def reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v}
        for col in [c for c in row if c in self.pivots]:
            f = row.get(col)
            if not f:
                continue
            for c, v in self.pivots[col].items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def add(self, row: dict):
        """Insert a row. Returns its pivot column, or None if it was dependent."""
        row = self.reduce(row)
        if not row:
            return None
        col = min(row, key=self.priority)
        inv = 1 / row[col]
        row = {c: v * inv for c, v in row.items()}
        for pc in self._uses.pop(col, ()):
            other = self.pivots[pc]
            f = other.get(col)
            if not f:
                continue
            for c, v in row.items():
                nv = other.get(c, 0) - f * v
                if nv:
                    if c not in other:
                        self._uses.setdefault(c, set()).add(pc)
                    other[c] = nv
                else:
                    other.pop(c, None)
        self.pivots[col] = row
        for c in row:
            if c != col:
                self._uses.setdefault(c, set()).add(col)
        return col


def solve(matrix: Sequence[Sequence], rhs: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve A X = B for square nonsingular A. B is given as a list of rows."""
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise ShapeError("matrix must be square")
    if len(rhs) != n:
        raise ShapeError("right-hand side has the wrong number of rows")
    k = len(rhs[0]) if n else 0
    a = [[Fraction(x) for x in matrix[i]] + [Fraction(x) for x in rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise InvariantViolation(f"singular matrix (no pivot in column {col})")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        prow = [v * inv for v in a[col]]
        a[col] = prow
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], prow)]
    return [row[n:n + k] for row in a]


def inverse(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(matrix)
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return solve(matrix, ident)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    if a and len(a[0]) != len(b):
        raise ShapeError("inner dimensions differ")
    cols = len(b[0]) if b else 0
    return [[sum((Fraction(a[i][k]) * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(cols)] for i in range(len(a))]


def determinant(matrix: Sequence[Sequence], one=1, zero=0):
    """Laplace expansion along the first row. Works for any commutative ring
    elements supporting +, -, *; meant for tiny matrices only."""
    n = len(matrix)
    if n == 0:
        return one
    if n == 1:
        return matrix[0][0]
    total = zero
    for j in range(n):
        entry = matrix[0][j]
        if _is_zero(entry):
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * determinant(minor, one, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


def _is_zero(x) -> bool:
    try:
        return not x
    except TypeError:
        return False


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
