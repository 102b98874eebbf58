"""Registry of Grassmannians and their symmetric-space models.

A concrete space (``Gr_2(C^5)``, ``SO(8)/S(O(3)xO(5))``, ``LGr(R^6)``...)
resolves to a :class:`SpaceSpec`, which knows which algebra family models
its cohomology and with which parameters.
"""

from __future__ import annotations

import difflib
import re
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb

from .errors import InvariantViolation, RangeError, SpaceLookupError, UnsupportedCase
from .exterior import (GROUP_CASES, GROUP_SO_EVEN, GROUP_SO_ODD, GROUP_SP, GROUP_U, U_O, U_SP,
                       ExteriorDescriptor, degree_list, poincare_ext)
from .hpq import RingDescriptor, poincare_polynomial
from .poly import Polynomial, poly_divide_univariate, univariate
from .squarefree import C_OVER_A, D_OVER_A, SquarefreeDescriptor, poincare_sf
from .weyl import (SO_EVEN_EVEN, SO_EVEN_ODD, SO_ODD_ODD, SO_U, SP_PQ, SP_U, U_PQ, WeylCase,
                   invariant_values)

HPQ = "hpq"
HPQ_E = "hpq+e"
SQF_C = "squarefree-C"
SQF_D = "squarefree-D"
EXTERIOR = "exterior"


@dataclass(frozen=True)
class Template:
    key: str
    name: str
    field: str
    label: str
    family: str
    params: tuple
    grading_weight: int | None
    supports_clifford: bool
    note: str = ""


TEMPLATES = (
    Template("Gr-C", "Gr_p(C^{p+q})", "C", "U(p+q)/U(p)xU(q)", HPQ, ("p", "q"), 2, True),
    Template("Gr-H", "Gr_p(H^{p+q})", "H", "Sp(p+q)/Sp(p)xSp(q)", HPQ, ("p", "q"), 4, True),
    Template("Gr-R", "Gr_k(R^{k+m})", "R", "SO(k+m)/S(O(k)xO(m))", f"{HPQ} | {HPQ_E}", ("k", "m"), 4, True,
             "parity of (k,m) selects the family; (odd, even) is handled by swapping"),
    Template("LGr-R", "LGr(R^{2n})", "R", "U(n)/O(n)", EXTERIOR, ("n",), None, False),
    Template("LGr-C", "LGr(C^{2n})", "C", "Sp(n)/U(n)", SQF_C, ("n",), 2, True),
    Template("OLGr-C", "OLGr+(C^{2n})", "C", "SO(2n)/U(n)", SQF_D, ("n",), 2, True,
             "one connected component of OLGr(C^{2n}); both have the same cohomology"),
    Template("HLGr-R", "HLGr+(R^{2n})", "R", "SO(n)xSO(n)/SO(n)", EXTERIOR, ("n",), None, True,
             "one connected component of HLGr(R^{2n})"),
    Template("HLGr-C", "HLGr(C^{2n})", "C", "U(n)xU(n)/U(n)", EXTERIOR, ("n",), None, True),
    Template("HLGr-H", "HLGr(H^{2n})", "H", "Sp(n)xSp(n)/Sp(n)", EXTERIOR, ("n",), None, True),
    Template("LGr*-H", "LGr*(H^{2n})", "H", "U(2n)/Sp(n)", EXTERIOR, ("n",), None, False),
)

_BY_KEY = {t.key: t for t in TEMPLATES}


@dataclass(frozen=True)
class SpaceSpec:
    name: str
    template: str
    field: str
    label: str
    family: str
    params: dict = field(hash=False)
    grading_weight: int | None
    supports_clifford: bool
    case_id: str
    swapped: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def _spec(key: str, **params) -> SpaceSpec:
    t = _BY_KEY[key]
    if key in ("Gr-C", "Gr-H"):
        p, q = params["p"], params["q"]
        if p < 1 or q < 1:
            raise RangeError(f"{t.name} needs p, q >= 1 (got p={p}, q={q})")
        f = "C" if key == "Gr-C" else "H"
        label = f"U({p + q})/U({p})xU({q})" if f == "C" else f"Sp({p + q})/Sp({p})xSp({q})"
        pp, qq = min(p, q), max(p, q)
        return SpaceSpec(f"Gr_{p}({f}^{p + q})", t.name, f, label, HPQ, {"p": pp, "q": qq},
                         t.grading_weight, True, U_PQ if f == "C" else SP_PQ, p > q)
    if key == "Gr-R":
        return _real_grassmannian(params["k"], params["m"])
    n = params["n"]
    if n < 1:
        raise RangeError(f"{t.name} needs n >= 1 (got {n})")
    if key == "LGr-R":
        return SpaceSpec(f"LGr(R^{2 * n})", t.name, "R", f"U({n})/O({n})", EXTERIOR,
                         {"n": n, "degrees": list(degree_list(U_O, n))}, None, False, U_O)
    if key == "LGr-C":
        return SpaceSpec(f"LGr(C^{2 * n})", t.name, "C", f"Sp({n})/U({n})", SQF_C, {"n": n}, 2, True, SP_U)
    if key == "OLGr-C":
        return SpaceSpec(f"OLGr+(C^{2 * n})", t.name, "C", f"SO({2 * n})/U({n})", SQF_D, {"n": n}, 2, True, SO_U)
    if key == "HLGr-R":
        case, size = (GROUP_SO_ODD, (n - 1) // 2) if n % 2 else (GROUP_SO_EVEN, n // 2)
        return SpaceSpec(f"HLGr+(R^{2 * n})", t.name, "R", f"SO({n})xSO({n})/SO({n})", EXTERIOR,
                         {"n": n, "group_size": size, "degrees": list(degree_list(case, size))},
                         None, True, case)
    if key == "HLGr-C":
        return SpaceSpec(f"HLGr(C^{2 * n})", t.name, "C", f"U({n})xU({n})/U({n})", EXTERIOR,
                         {"n": n, "degrees": list(degree_list(GROUP_U, n))}, None, True, GROUP_U)
    if key == "HLGr-H":
        return SpaceSpec(f"HLGr(H^{2 * n})", t.name, "H", f"Sp({n})xSp({n})/Sp({n})", EXTERIOR,
                         {"n": n, "degrees": list(degree_list(GROUP_SP, n))}, None, True, GROUP_SP)
    if key == "LGr*-H":
        return SpaceSpec(f"LGr*(H^{2 * n})", t.name, "H", f"U({2 * n})/Sp({n})",
                         EXTERIOR, {"n": n, "degrees": list(degree_list(U_SP, n))}, None, False, U_SP)
    raise SpaceLookupError(key)


def _real_grassmannian(k: int, m: int) -> SpaceSpec:
    t = _BY_KEY["Gr-R"]
    if k < 1 or m < 1:
        raise RangeError(f"Gr_k(R^(k+m)) needs k, m >= 1 (got k={k}, m={m})")
    name = f"Gr_{k}(R^{k + m})"
    label = f"SO({k + m})/S(O({k})xO({m}))"
    a, b = (m, k) if (k % 2, m % 2) == (1, 0) else (k, m)
    if a % 2 == 0 and b % 2 == 0:
        p, q, case, fam = a // 2, b // 2, SO_EVEN_EVEN, HPQ
    elif a % 2 == 0:
        p, q, case, fam = a // 2, (b - 1) // 2, SO_EVEN_ODD, HPQ
    else:
        p, q, case, fam = (a - 1) // 2, (b - 1) // 2, SO_ODD_ODD, HPQ_E
    if p < 1 or q < 1:
        raise RangeError(f"{name} has a block of rank zero (p={p}, q={q}); "
                         "only cases with both blocks of rank >= 1 are modelled")
    swapped = p > q
    return SpaceSpec(name, t.name, "R", label, fam, {"p": min(p, q), "q": max(p, q), "k": k, "m": m},
                     4, True, case, swapped)


# name parsing

_PATTERNS = [
    (r"Gr_(\d+)\(([RCH])\^(\d+)\)", "gr"),
    (r"LGr\(([RC])\^(\d+)\)", "lgr"),
    (r"OLGr\+?\(C\^(\d+)\)", "olgr"),
    (r"HLGr\+?\(([RCH])\^(\d+)\)", "hlgr"),
    (r"LGr\*\(H\^(\d+)\)", "lgrstar"),
    (r"U\((\d+)\)/U\((\d+)\)xU\((\d+)\)", "gk_u"),
    (r"Sp\((\d+)\)/Sp\((\d+)\)xSp\((\d+)\)", "gk_sp"),
    (r"SO\((\d+)\)/S\(O\((\d+)\)xO\((\d+)\)\)", "gk_so"),
    (r"U\((\d+)\)/O\((\d+)\)", "gk_uo"),
    (r"Sp\((\d+)\)/U\((\d+)\)", "gk_spu"),
    (r"SO\((\d+)\)/U\((\d+)\)", "gk_sou"),
    (r"U\((\d+)\)/Sp\((\d+)\)", "gk_usp"),
    (r"(S?O|U|Sp)\((\d+)\)x(S?O|U|Sp)\((\d+)\)/(S?O|U|Sp)\((\d+)\)", "gk_group"),
]

KNOWN_NAMES = [t.name for t in TEMPLATES] + [t.label for t in TEMPLATES] + [
    "Gr", "LGr", "OLGr+", "HLGr", "HLGr+", "LGr*"]


def _norm(name: str) -> str:
    return name.replace(" ", "").replace("×", "x").replace("{", "").replace("}", "")


def _even(n: int, name: str) -> int:
    if n % 2:
        raise RangeError(f"{name}: dimension {n} must be even")
    return n // 2


def lookup(name: str) -> SpaceSpec:
    """Resolve a concrete space name (Grassmannian or G/K form)."""
    s = _norm(name)
    for pat, kind in _PATTERNS:
        m = re.fullmatch(pat, s)
        if not m:
            continue
        g = m.groups()
        if kind == "gr":
            k, f, total = int(g[0]), g[1], int(g[2])
            if total <= k:
                raise RangeError(f"{name}: need 0 < k < dimension")
            if f == "R":
                return _real_grassmannian(k, total - k)
            return _spec("Gr-C" if f == "C" else "Gr-H", p=k, q=total - k)
        if kind == "lgr":
            return _spec("LGr-R" if g[0] == "R" else "LGr-C", n=_even(int(g[1]), name))
        if kind == "olgr":
            return _spec("OLGr-C", n=_even(int(g[0]), name))
        if kind == "hlgr":
            return _spec({"R": "HLGr-R", "C": "HLGr-C", "H": "HLGr-H"}[g[0]], n=_even(int(g[1]), name))
        if kind == "lgrstar":
            return _spec("LGr*-H", n=_even(int(g[0]), name))
        a = [int(x) for x in g if x.isdigit()]
        if kind in ("gk_u", "gk_sp", "gk_so"):
            if a[0] != a[1] + a[2]:
                raise RangeError(f"{name}: block sizes must add up")
            if kind == "gk_so":
                return _real_grassmannian(a[1], a[2])
            return _spec("Gr-C" if kind == "gk_u" else "Gr-H", p=a[1], q=a[2])
        if kind == "gk_uo" and a[0] == a[1]:
            return _spec("LGr-R", n=a[0])
        if kind == "gk_spu" and a[0] == a[1]:
            return _spec("LGr-C", n=a[0])
        if kind == "gk_sou" and a[0] == 2 * a[1]:
            return _spec("OLGr-C", n=a[1])
        if kind == "gk_usp" and a[0] == 2 * a[1]:
            return _spec("LGr*-H", n=a[1])
        if kind == "gk_group":
            kinds = {g[0], g[2], g[4]}
            if len(kinds) == 1 and a[0] == a[1] == a[2]:
                grp = g[0]
                key = {"SO": "HLGr-R", "O": "HLGr-R", "U": "HLGr-C", "Sp": "HLGr-H"}[grp]
                return _spec(key, n=a[0])
        raise RangeError(f"{name}: inconsistent sizes")
    raise SpaceLookupError(name, difflib.get_close_matches(s, KNOWN_NAMES, n=3, cutoff=0.4))


_KINDS = {"Gr": "Gr", "LGr": "LGr", "OLGr": "OLGr", "OLGr+": "OLGr", "HLGr": "HLGr", "HLGr+": "HLGr",
          "LGr*": "LGr*"}


def lookup_kind(kind: str, field_tag: str, p: int | None = None, q: int | None = None,
                n: int | None = None) -> SpaceSpec:
    """Resolve the (kind, field, params) form used by the command line."""
    k = _KINDS.get(kind.strip())
    f = field_tag.strip().upper()
    if k is None:
        raise SpaceLookupError(kind, difflib.get_close_matches(kind, list(_KINDS), n=3, cutoff=0.3))
    if f not in ("R", "C", "H"):
        raise RangeError(f"field must be R, C or H (got {field_tag!r})")
    if k == "Gr":
        if p is None or q is None:
            raise RangeError("Gr needs --p and --q")
        if f == "R":
            return _real_grassmannian(p, q)
        return _spec("Gr-C" if f == "C" else "Gr-H", p=p, q=q)
    if n is None:
        raise RangeError(f"{kind} needs --n")
    table = {("LGr", "R"): "LGr-R", ("LGr", "C"): "LGr-C", ("OLGr", "C"): "OLGr-C",
             ("HLGr", "R"): "HLGr-R", ("HLGr", "C"): "HLGr-C", ("HLGr", "H"): "HLGr-H",
             ("LGr*", "H"): "LGr*-H"}
    key = table.get((k, f))
    if key is None:
        raise SpaceLookupError(f"{kind}({f}^2n)", [t.name for t in TEMPLATES if t.name.startswith(k)])
    return _spec(key, n=n)


# building descriptors

def build_ring(spec: SpaceSpec, mode: str = "graded", allow_unverified: bool = False):
    if mode not in ("graded", "clifford"):
        raise RangeError(f"mode must be graded or clifford (got {mode!r})")
    cliff = mode == "clifford"
    if cliff and not spec.supports_clifford and not allow_unverified:
        raise UnsupportedCase(f"Clifford mode is not available for {spec.label}")
    prm = spec.params
    if spec.family in (HPQ, HPQ_E):
        p, q = prm["p"], prm["q"]
        case = WeylCase.two_block(spec.case_id, p, q)
        has_e = spec.family == HPQ_E
        c = invariant_values(case) if cliff else (0,) * (p + q)
        return RingDescriptor(case.family, p, q, c, spec.grading_weight, has_e,
                              2 * p + 2 * q + 1 if has_e else 0, Fraction(int(cliff and has_e)),
                              spec.case_id)
    if spec.family in (SQF_C, SQF_D):
        n = prm["n"]
        variant = C_OVER_A if spec.family == SQF_C else D_OVER_A
        if not cliff:
            return SquarefreeDescriptor(n, variant)
        vals = invariant_values(WeylCase.rank(spec.case_id, n))
        if variant == C_OVER_A:
            return SquarefreeDescriptor(n, variant, vals)
        return SquarefreeDescriptor(n, variant, vals[:-1], vals[-1])
    if spec.family == EXTERIOR:
        size = prm.get("group_size", prm["n"])
        degs = degree_list(spec.case_id, size)
        if not cliff:
            return ExteriorDescriptor(spec.case_id, size, degs)
        return ExteriorDescriptor(spec.case_id, size, degs, True, Fraction(1),
                                  spec.case_id not in GROUP_CASES)
    raise UnsupportedCase(f"unknown family {spec.family!r}")


# closed-form oracles

def gaussian_binomial(p: int, q: int, w: int = 1) -> Polynomial:
    """[p+q choose p] in t^w, by exact polynomial division."""
    if p < 1 or q < 1:
        raise RangeError("p and q must be at least 1")
    one = univariate({0: 1})
    num, den = one, one
    for i in range(1, p + 1):
        num = num * univariate({0: 1, w * (q + i): -1})
        den = den * univariate({0: 1, w * i: -1})
    quo, rem = poly_divide_univariate(num, den)
    if not rem.is_zero():
        raise InvariantViolation("Gaussian binomial division left a remainder")
    return quo


def product_poincare(degrees) -> Polynomial:
    out = univariate({0: 1})
    for d in degrees:
        out = out * univariate({0: 1, d: 1})
    return out


def expected_poincare(spec: SpaceSpec) -> Polynomial:
    prm = spec.params
    if spec.family == HPQ:
        return gaussian_binomial(prm["p"], prm["q"], spec.grading_weight)
    if spec.family == HPQ_E:
        p, q = prm["p"], prm["q"]
        return gaussian_binomial(p, q, 4) * univariate({0: 1, 2 * p + 2 * q + 1: 1})
    if spec.family == SQF_C:
        return product_poincare(2 * i for i in range(1, prm["n"] + 1))
    if spec.family == SQF_D:
        return product_poincare(2 * i for i in range(1, prm["n"]))
    return product_poincare(prm["degrees"])


def euler_characteristic(spec: SpaceSpec) -> int:
    prm = spec.params
    if spec.family == HPQ:
        return comb(prm["p"] + prm["q"], prm["p"])
    if spec.family == HPQ_E:
        return 0
    if spec.family == SQF_C:
        return 2 ** prm["n"]
    if spec.family == SQF_D:
        return 2 ** (prm["n"] - 1)
    return 0 if prm["degrees"] else 1


def poincare(descriptor) -> Polynomial:
    """Engine Poincare polynomial of any graded descriptor."""
    if isinstance(descriptor, RingDescriptor):
        return poincare_polynomial(descriptor)
    if isinstance(descriptor, SquarefreeDescriptor):
        return poincare_sf(descriptor)
    return poincare_ext(descriptor)


def alternating_sum(poly: Polynomial) -> int:
    """Euler characteristic from graded dimensions."""
    return int(sum(c * (-1) ** e for (e,), c in poly.items()))


def registry() -> list[dict]:
    return [asdict(t) for t in TEMPLATES]
