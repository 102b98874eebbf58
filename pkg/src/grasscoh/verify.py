"""Verification suites shared by the command line and the test-suite.

Each suite returns a :class:`SuiteResult` with a check count and a list of
failures, every failure naming the violated property and a witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import catalog
from .errors import RangeError
from .exterior import EXTERIOR_CASES, basis_ext, exterior_descriptor
from .hpq import (RingDescriptor, RingElement, associated_graded_check, basis, build_rewrite_table,
                  cramer_rewrite_table, ev_element, generic_c, idempotents, multiply)
from .poly import Polynomial, is_palindromic
from .schur import Partition, box_partitions, pieri_oracle, schur_multiply
from .squarefree import C_OVER_A, D_OVER_A, SquarefreeDescriptor, basis_sf, normal_form_sf
from .weyl import SO_EVEN_EVEN, SO_EVEN_ODD, SP_PQ, U_PQ, WeylCase, invariant_values

SUITES = ("dims", "poincare", "idempotents", "gr", "schur", "cramer", "termination")
# cases whose rho is fixed by the theory, as opposed to a chosen normalization
RHO_CASES = (SP_PQ, SO_EVEN_EVEN, SO_EVEN_ODD)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, prop: str, witness) -> None:
        self.checks += 1
        if not cond:
            self.failures.append({"property": prop, "witness": str(witness)})

    def to_dict(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "checks": self.checks, "failures": self.failures}


def deformed(case_id: str, p: int, q: int) -> tuple[RingDescriptor, WeylCase]:
    case = WeylCase.two_block(case_id, p, q)
    w = 2 if case_id == U_PQ else 4
    return RingDescriptor(case.family, p, q, invariant_values(case), w, case=case_id), case


def suite_dims(max_size: int = 6, max_n: int = 8) -> SuiteResult:
    res = SuiteResult("dims")
    for q in range(1, max_size + 1):
        for p in range(1, q + 1):
            d = RingDescriptor.graded(p, q)
            build_rewrite_table(d)
            res.check(len(basis(d)) == comb(p + q, p), "dim H(p,q;0) = C(p+q,p)", (p, q))
            de = RingDescriptor.graded(p, q, 4, "B", True)
            res.check(len(basis(de)) == 2 * comb(p + q, p), "dim with e = 2 C(p+q,p)", (p, q))
    for n in range(1, max_n + 1):
        res.check(len(basis_sf(SquarefreeDescriptor(n, C_OVER_A))) == 2 ** n, "dim Sp(n)/U(n) = 2^n", n)
        res.check(len(basis_sf(SquarefreeDescriptor(n, D_OVER_A))) == 2 ** (n - 1),
                  "dim SO(2n)/U(n) = 2^(n-1)", n)
    for case in EXTERIOR_CASES:
        for n in range(1, max_size + 1):
            d = exterior_descriptor(case, n)
            res.check(len(basis_ext(d)) == 2 ** len(d.degrees), "dim exterior = 2^#degrees", (case, n))
    return res


def suite_poincare(max_size: int = 6, max_n: int = 8) -> SuiteResult:
    res = SuiteResult("poincare")

    def both(spec):
        got = catalog.poincare(catalog.build_ring(spec))
        res.check(got == catalog.expected_poincare(spec), "Poincare polynomial = closed form", spec.name)
        res.check(is_palindromic(got), "Poincare polynomial palindromic", spec.name)
        res.check(catalog.alternating_sum(got) == catalog.euler_characteristic(spec),
                  "Euler characteristic = alternating sum", spec.name)

    for q in range(1, max_size + 1):
        for p in range(1, q + 1):
            both(catalog.lookup(f"Gr_{p}(C^{p + q})"))
            both(catalog.lookup(f"Gr_{p}(H^{p + q})"))
    for a in range(2, 2 * max_size + 2):
        for b in range(a, 2 * max_size + 2):
            try:
                spec = catalog.lookup(f"Gr_{a}(R^{a + b})")
            except RangeError:
                continue
            if spec.params["q"] <= max_size:
                both(spec)
    for n in range(1, max_n + 1):
        both(catalog.lookup(f"LGr(C^{2 * n})"))
        both(catalog.lookup(f"OLGr+(C^{2 * n})"))
    for n in range(1, max_size + 1):
        for name in ("LGr(R^{})", "HLGr+(R^{})", "HLGr(C^{})", "HLGr(H^{})", "LGr*(H^{})"):
            both(catalog.lookup(name.format(2 * n)))
    return res


def suite_idempotents(max_size: int = 3, pairs: int = 50, seed: int = 0,
                      cases=RHO_CASES + (U_PQ,)) -> SuiteResult:
    res = SuiteResult("idempotents")
    rng = random.Random(seed)
    for case_id in cases:
        for q in range(1, max_size + 1):
            for p in range(1, q + 1):
                d, case = deformed(case_id, p, q)
                ids = idempotents(d, case)
                tag = (case_id, p, q)
                res.check(len(ids) == comb(p + q, p), "C(p+q,p) idempotents", tag)
                total = ids[0]
                for x in ids[1:]:
                    total = total + x
                res.check(total == RingElement.one(d), "idempotents sum to 1", tag)
                for i, x in enumerate(ids):
                    for j in range(i, len(ids)):
                        prod = multiply(x, ids[j])
                        want = x if i == j else RingElement(d)
                        res.check(prod == want, "pr_i pr_j = delta_ij pr_i", (tag, i, j))
                mons = [b.alpha for b in basis(d)]
                for _ in range(pairs):
                    x = RingElement(d, {m: rng.randint(-3, 3) for m in mons})
                    y = RingElement(d, {m: rng.randint(-3, 3) for m in mons})
                    res.check(ev_element(multiply(x, y), case) == ev_element(x, case) * ev_element(y, case),
                              "ev intertwines multiplication", (tag, str(x), str(y)))
    return res


def suite_gr(max_size: int = 3, cases=RHO_CASES + (U_PQ,)) -> SuiteResult:
    res = SuiteResult("gr")
    for case_id in cases:
        for q in range(1, max_size + 1):
            for p in range(1, q + 1):
                d, _ = deformed(case_id, p, q)
                rep = associated_graded_check(d, d.graded_version())
                res.checks += rep.pairs_checked
                for m in rep.mismatches:
                    res.failures.append({"property": "top component = graded product",
                                         "witness": str(((case_id, p, q),) + tuple(m))})
    return res


def suite_schur(max_size: int = 4) -> SuiteResult:
    res = SuiteResult("schur")
    for q in range(1, max_size + 1):
        for p in range(1, q + 1):
            d = RingDescriptor.graded(p, q)
            for lam in box_partitions(p, q):
                for k in range(1, p + 1):
                    got = schur_multiply(lam, Partition((1,) * k), d)
                    res.check(got == pieri_oracle(lam, k, p, q), "Schur product = Pieri rule", (p, q, lam, k))
    return res


def suite_cramer(max_size: int = 3, seeds: int = 2) -> SuiteResult:
    res = SuiteResult("cramer")
    for q in range(1, max_size + 1):
        for p in range(1, q + 1):
            cs = [(0,) * (p + q)] + [generic_c(p, q, s) for s in range(1, seeds + 1)]
            for c in cs:
                table = build_rewrite_table(RingDescriptor("A", p, q, c))
                for mono, rule in cramer_rewrite_table(p, q, c).items():
                    res.check(table.rule(mono) == Polynomial(p, rule), "Cramer rule = elimination rule",
                              (p, q, c, mono))
    return res


def suite_termination(runs: int = 1000, max_n: int = 6, seed: int = 0) -> SuiteResult:
    res = SuiteResult("termination")
    rng = random.Random(seed)
    for k in range(runs):
        n = rng.randint(1, max_n)
        variant = rng.choice((C_OVER_A, D_OVER_A)) if n > 1 else C_OVER_A
        m = n if variant == C_OVER_A else n - 1
        deform = rng.random() < 0.5
        t = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(m)) if deform else ()
        tb = Fraction(rng.randint(-4, 4)) if deform and variant == D_OVER_A else 0
        d = SquarefreeDescriptor(n, variant, t, tb)
        terms = {}
        for _ in range(rng.randint(1, 3)):
            mono = tuple(rng.randint(0, 3) for _ in range(m))
            terms[mono] = terms.get(mono, 0) + rng.randint(1, 5)
        trace: list = []
        got = normal_form_sf(d, terms, rng=random.Random(seed * 7919 + k), trace=trace)
        res.check(all(all(a < before for a in after) for before, after in trace),
                  "potential strictly decreases", (n, variant, terms))
        res.check(got == normal_form_sf(d, terms), "random order = deterministic normal form", (n, variant, terms))
    return res


def run(suite: str = "all", max_size: int | None = None) -> list[SuiteResult]:
    names = SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        if name == "dims":
            out.append(suite_dims(max_size or 6))
        elif name == "poincare":
            out.append(suite_poincare(max_size or 6))
        elif name == "idempotents":
            out.append(suite_idempotents(min(max_size or 3, 3)))
        elif name == "gr":
            out.append(suite_gr(min(max_size or 3, 3)))
        elif name == "schur":
            out.append(suite_schur(min(max_size or 4, 4)))
        elif name == "cramer":
            out.append(suite_cramer(min(max_size or 3, 4)))
        elif name == "termination":
            out.append(suite_termination(max_n=min(max_size or 6, 6)))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return out
