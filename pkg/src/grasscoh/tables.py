"""Multiplication tables over the distinguished basis, and their emitters.

One table works for every family: an :class:`AlgebraView` lists basis
labels, degrees and elements, and the table stores all pairwise products.
Rows are computed in a thread pool capped by ``GRASSCOH_THREADS``; the
output is assembled in basis order, so emitters are deterministic.
"""

from __future__ import annotations

import csv
import io
import json
import os
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, ShapeError
from .exterior import ExteriorDescriptor, ExteriorElement, basis_ext, format_wedge
from .hpq import RingDescriptor, RingElement, basis
from .poly import format_monomial, rational_str
from .squarefree import SquarefreeDescriptor, SquarefreeElement, basis_sf

THREADS_ENV = "GRASSCOH_THREADS"


def thread_cap(default: int | None = None) -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return default or min(8, os.cpu_count() or 1)


@dataclass(frozen=True)
class AlgebraView:
    descriptor: object
    labels: tuple
    degrees: tuple
    elements: tuple
    commutative: bool

    def __len__(self) -> int:
        return len(self.labels)


def view(descriptor) -> AlgebraView:
    if isinstance(descriptor, RingDescriptor):
        bs = basis(descriptor)
        degs = tuple(descriptor.degree(b.alpha) + (descriptor.e_degree if b.e else 0) for b in bs)
        return AlgebraView(descriptor, tuple(b.label() for b in bs), degs,
                           tuple(RingElement.from_basis(descriptor, b) for b in bs), not descriptor.has_e)
    if isinstance(descriptor, SquarefreeDescriptor):
        bs = basis_sf(descriptor)
        return AlgebraView(descriptor, tuple(format_monomial(b, "r") for b in bs),
                           tuple(descriptor.degree(b) for b in bs),
                           tuple(SquarefreeElement(descriptor, {b: 1}) for b in bs), True)
    if isinstance(descriptor, ExteriorDescriptor):
        bs = basis_ext(descriptor)
        return AlgebraView(descriptor, tuple(format_wedge(b) for b in bs),
                           tuple(descriptor.degree(b) for b in bs),
                           tuple(ExteriorElement(descriptor, {b: 1}) for b in bs), False)
    raise ShapeError(f"no table view for {type(descriptor).__name__}")


@dataclass(frozen=True)
class MultiplicationTable:
    view: AlgebraView
    products: tuple

    @property
    def labels(self) -> tuple:
        return self.view.labels

    def product(self, i: int, j: int):
        return self.products[i][j]

    def cell(self, i: int, j: int) -> str:
        return str(self.products[i][j])

    def vector(self, i: int, j: int) -> list[Fraction]:
        return self.products[i][j].vector()

    def is_symmetric(self) -> bool:
        n = len(self.products)
        return all(self.products[i][j] == self.products[j][i] for i in range(n) for j in range(i))


def multiplication_table(descriptor, threads: int | None = None) -> MultiplicationTable:
    v = view(descriptor)
    els = v.elements

    def row(i: int) -> tuple:
        return tuple(els[i] * els[j] for j in range(len(els)))

    workers = min(threads or thread_cap(), max(1, len(els)))
    if workers == 1:
        rows = [row(i) for i in range(len(els))]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, range(len(els))))
    return MultiplicationTable(v, tuple(rows))


def _shown(table: MultiplicationTable, skip_unit: bool):
    n = len(table.labels)
    start = 1 if skip_unit and n > 1 else 0
    return list(range(start, n))


# emitters

def to_json(table: MultiplicationTable) -> str:
    v = table.view
    out = {
        "descriptor": v.descriptor.to_dict(),
        "basis": [{"label": l, "degree": d} for l, d in zip(v.labels, v.degrees)],
        "table": [[[rational_str(x) for x in table.vector(i, j)] for j in range(len(v))]
                  for i in range(len(v))],
    }
    return json.dumps(out, indent=2)


def to_csv(table: MultiplicationTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["left", "right"] + list(table.labels))
    n = len(table.labels)
    for i in range(n):
        for j in range(n):
            w.writerow([table.labels[i], table.labels[j]] + [rational_str(x) for x in table.vector(i, j)])
    return buf.getvalue()


def to_text(table: MultiplicationTable, skip_unit: bool = True) -> str:
    """Aligned grid. Commutative tables show only the upper triangle."""
    idx = _shown(table, skip_unit)
    comm = table.view.commutative
    grid = [[""] + [table.labels[j] for j in idx]]
    for i in idx:
        grid.append([table.labels[i]] + [table.cell(i, j) if (j >= i or not comm) else "" for j in idx])
    widths = [max(len(r[k]) for r in grid) for k in range(len(grid[0]))]
    lines = []
    for r in grid:
        cells = [c.ljust(w) for c, w in zip(r, widths)]
        lines.append((cells[0] + " | " + "  ".join(cells[1:])).rstrip())
        if r is grid[0]:
            lines.append("-" * len(lines[0]))
    return "\n".join(lines) + "\n"


_VAR = re.compile(r"([rg])(\d+)")


def latex_cell(text: str) -> str:
    """Text form of an element to inline LaTeX, e.g. 3*r1^2*r2 - r2^2 -> $3r_1^2r_2-r_2^2$."""
    if text == "0":
        return "0"
    s = text.replace("*", "").replace(" ", "")
    s = re.sub(r"g(\d+)\^(?=g)", r"g\1\\wedge ", s)
    s = _VAR.sub(lambda m: f"{m.group(1)}_{m.group(2) if len(m.group(2)) == 1 else '{' + m.group(2) + '}'}", s)
    return f"${s}$"


def to_latex(table: MultiplicationTable, skip_unit: bool = True) -> str:
    idx = _shown(table, skip_unit)
    comm = table.view.commutative
    lines = [r"\begin{tabular}{|c||" + "c|" * len(idx) + "}",
             r"\hline & " + " & ".join(latex_cell(table.labels[j]) for j in idx) + r" \\",
             r"\hline", r"\hline"]
    for i in idx:
        cells = [latex_cell(table.cell(i, j)) if (j >= i or not comm) else "" for j in idx]
        lines.append(latex_cell(table.labels[i]) + " & " + " & ".join(cells) + r" \\")
        lines.append(r"\hline")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def emit(table: MultiplicationTable, fmt: str) -> str:
    if fmt == "json":
        return to_json(table)
    if fmt == "csv":
        return to_csv(table)
    if fmt == "latex":
        return to_latex(table)
    return to_text(table)


# parsing back

def descriptor_from_dict(d: dict):
    fam = d.get("family")
    if fam in ("hpq", "hpq+e"):
        has_e = fam == "hpq+e"
        return RingDescriptor(d["tag"], d["p"], d["q"], tuple(Fraction(x) for x in d["c"]),
                              d["grading_weight"], has_e, d.get("e_degree", 0),
                              Fraction(d.get("e_square", "0/1")), d.get("case"))
    if fam in ("squarefree-C", "squarefree-D"):
        from .squarefree import C_OVER_A, D_OVER_A
        variant = C_OVER_A if fam == "squarefree-C" else D_OVER_A
        return SquarefreeDescriptor(d["n"], variant, tuple(Fraction(x) for x in d["t"]),
                                    Fraction(d.get("tbar_n", "0/1")))
    if fam == "exterior":
        cliff = "clifford_square" in d
        return ExteriorDescriptor(d["case"], d["n"], tuple(d["degrees"]), cliff,
                                  Fraction(d.get("clifford_square", "1/1")), d.get("unverified", False))
    raise ParseError(f"unknown family {fam!r}")


def table_from_json(text: str) -> MultiplicationTable:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad table JSON: {exc}") from exc
    desc = descriptor_from_dict(data["descriptor"])
    v = view(desc)
    if [b["label"] for b in data["basis"]] != list(v.labels):
        raise ParseError("basis labels do not match the descriptor")
    rows = []
    for row in data["table"]:
        out = []
        for vec in row:
            acc = None
            for el, x in zip(v.elements, vec):
                term = el.scale(Fraction(x))
                acc = term if acc is None else acc + term
            out.append(acc)
        rows.append(tuple(out))
    return MultiplicationTable(v, tuple(rows))
