import csv
import io
import json
from fractions import Fraction

import pytest

from grasscoh.catalog import build_ring, lookup
from grasscoh.errors import UnsupportedCase
from grasscoh.hpq import RingDescriptor
from grasscoh.tables import (descriptor_from_dict, latex_cell, multiplication_table, table_from_json,
                             to_csv, to_json, to_latex, to_text, view)

import worked_example as pf

SPACES = ["Gr_2(C^5)", "Gr_1(H^3)", "Gr_3(R^8)", "LGr(C^6)", "OLGr+(C^8)", "HLGr(C^6)", "LGr*(H^4)"]


def test_worked_example_table_text():
    t = multiplication_table(RingDescriptor.graded(2, 3))
    assert list(t.labels[1:]) == pf.LABELS
    rows = pf.corrected_rows()
    for i in range(9):
        for j in range(i, 9):
            assert t.cell(i + 1, j + 1) == rows[i][j - i]


def test_latex_layout():
    out = to_latex(multiplication_table(RingDescriptor.graded(2, 3))).splitlines()
    assert out[0] == r"\begin{tabular}{|c||c|c|c|c|c|c|c|c|c|}"
    assert out[1] == (r"\hline & $r_1$ & $r_2$ & $r_1^2$ & $r_1r_2$ & $r_2^2$ & $r_1^3$ & $r_1^2r_2$ & "
                      r"$r_1r_2^2$ & $r_2^3$ \\")
    assert out[4] == (r"$r_1$ & $r_1^2$ & $r_1r_2$ & $r_1^3$ & $r_1^2r_2$ & $r_1r_2^2$ & $3r_1^2r_2-r_2^2$ & "
                      r"$2r_1r_2^2$ & $r_2^3$ & 0 \\")
    assert out[-1] == r"\end{tabular}"
    assert latex_cell("g1^g3") == r"$g_1\wedge g_3$"
    assert latex_cell("r12^2") == "$r_{12}^2$"


@pytest.mark.parametrize("name", SPACES)
@pytest.mark.parametrize("mode", ["graded", "clifford"])
def test_json_round_trip_and_symmetry(name, mode):
    spec = lookup(name)
    if mode == "clifford" and not spec.supports_clifford:
        with pytest.raises(UnsupportedCase):
            build_ring(spec, mode)
        return
    d = build_ring(spec, mode)
    t = multiplication_table(d)
    text = to_json(t)
    back = table_from_json(text)
    assert back.products == t.products
    assert descriptor_from_dict(json.loads(text)["descriptor"]) == d
    if t.view.commutative:
        assert t.is_symmetric()


def test_exterior_table_is_graded_commutative():
    t = multiplication_table(build_ring(lookup("HLGr(C^6)")))
    n = len(t.labels)
    for i in range(n):
        for j in range(n):
            si, sj = t.view.elements[i], t.view.elements[j]
            k = len(next(iter(si.coords))) * len(next(iter(sj.coords)))
            assert t.product(i, j) == t.product(j, i).scale((-1) ** k)


def test_csv_is_exact():
    t = multiplication_table(build_ring(lookup("Gr_1(C^2)"), "clifford"))
    rows = list(csv.reader(io.StringIO(to_csv(t))))
    assert rows[0] == ["left", "right", "1", "r1"]
    assert rows[4] == ["r1", "r1", "1/4", "0/1"]
    assert all(Fraction(x) is not None for r in rows[1:] for x in r[2:])


def test_emitters_are_deterministic():
    d = build_ring(lookup("Gr_2(H^6)"))
    a = multiplication_table(d, threads=1)
    b = multiplication_table(d, threads=4)
    for f in (to_json, to_csv, to_latex, to_text):
        assert f(a) == f(b)


def test_thread_cap(monkeypatch):
    from grasscoh.tables import thread_cap
    monkeypatch.setenv("GRASSCOH_THREADS", "3")
    assert thread_cap() == 3
    monkeypatch.setenv("GRASSCOH_THREADS", "junk")
    assert thread_cap(5) == 5


def test_view_degrees():
    v = view(build_ring(lookup("Gr_3(R^8)")))
    assert v.labels[:2] == ("1", "r1") and "e" in v.labels
    assert v.degrees[v.labels.index("e")] == 7
    assert len(v) == 6


def test_text_grid_skips_unit():
    text = to_text(multiplication_table(RingDescriptor.graded(1, 1)))
    assert text.splitlines()[0].split() == ["|", "r1"]
    assert text.splitlines()[2].split() == ["r1", "|", "0"]
