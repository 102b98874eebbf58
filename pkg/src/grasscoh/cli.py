"""Command line: ``grasscoh ring|table|schur|verify|list-spaces``.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, tables, verify
from .errors import GrasscohError, InvariantViolation, RangeError
from .hpq import RingDescriptor, normal_form
from .poly import Polynomial, parse_polynomial, rational_str
from .schur import format_schur, jacobi_trudi, parse_partition, schur_multiply, schur_vector_json, to_schur

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
KINDS = ("Gr", "LGr", "OLGr", "OLGr+", "HLGr", "HLGr+", "LGr*")


def format_t(poly: Polynomial) -> str:
    """Univariate polynomial in t, increasing degree: 1 + t^2 + 2*t^4."""
    parts = []
    for (e,), c in sorted(poly.items()):
        mono = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
        mag = abs(c)
        body = mono if mag == 1 else (str(mag) if e == 0 else f"{mag}*{mono}")
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts) if parts else "0"


def _space_args(sp: argparse.ArgumentParser):
    sp.add_argument("space", help="a kind (Gr, LGr, OLGr+, HLGr, LGr*) or a concrete name like Gr_2(C^5)")
    sp.add_argument("--field", help="R, C or H (with a kind)")
    sp.add_argument("--p", "--k", dest="p", type=int)
    sp.add_argument("--q", "--m", dest="q", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--mode", choices=("graded", "clifford"), default="graded")
    sp.add_argument("--allow-unverified", action="store_true",
                    help="allow Clifford mode for exterior cases without a proof")
    sp.add_argument("--out")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="grasscoh", description="Exact cohomology rings of classical Grassmannians.")
    sub = ap.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="descriptor, basis, Poincare polynomial, Euler characteristic")
    _space_args(ring)
    ring.add_argument("--format", choices=("text", "json"), default="text")

    table = sub.add_parser("table", help="full multiplication table")
    _space_args(table)
    table.add_argument("--format", choices=("text", "json", "csv", "latex"), default="text")
    table.add_argument("--threads", type=int)

    schur = sub.add_parser("schur", help="Schur polynomials in the p x q box")
    schur.add_argument("action", choices=("expand", "convert", "multiply"))
    schur.add_argument("args", nargs="+")
    schur.add_argument("--p", "--k", dest="p", type=int, required=True)
    schur.add_argument("--q", "--m", dest="q", type=int, required=True)
    schur.add_argument("--format", choices=("text", "json"), default="text")
    schur.add_argument("--out")

    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    ver.add_argument("--max-size", type=int)
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.add_argument("--out")

    ls = sub.add_parser("list-spaces", help="the registry of spaces")
    ls.add_argument("--format", choices=("json", "text"), default="json")
    ls.add_argument("--out")
    return ap


def resolve(args) -> catalog.SpaceSpec:
    if args.space in KINDS:
        if not args.field:
            raise RangeError(f"{args.space} needs --field")
        return catalog.lookup_kind(args.space, args.field, args.p, args.q, args.n)
    return catalog.lookup(args.space)


def cmd_ring(args) -> str:
    spec = resolve(args)
    desc = catalog.build_ring(spec, args.mode, args.allow_unverified)
    v = tables.view(desc)
    graded = args.mode == "graded"
    pp = catalog.poincare(desc) if graded else None
    chi = catalog.euler_characteristic(spec)
    if args.format == "json":
        return json.dumps({
            "space": spec.to_dict(),
            "mode": args.mode,
            "descriptor": desc.to_dict(),
            "dimension": len(v),
            "basis": [{"label": l, "degree": d} for l, d in zip(v.labels, v.degrees)],
            "poincare": {str(e): int(c) for (e,), c in sorted(pp.items())} if pp is not None else None,
            "euler_characteristic": chi,
        }, indent=2) + "\n"
    lines = [f"space: {spec.name} = {spec.label}", f"family: {spec.family}", f"mode: {args.mode}",
             f"descriptor: {desc}", f"dimension: {len(v)}", "basis:"]
    lines += [f"  {l}  (degree {d})" for l, d in zip(v.labels, v.degrees)]
    if pp is not None:
        lines.append(f"poincare: {format_t(pp)}")
    lines.append(f"euler characteristic: {chi}")
    return "\n".join(lines) + "\n"


def cmd_table(args) -> str:
    spec = resolve(args)
    desc = catalog.build_ring(spec, args.mode, args.allow_unverified)
    return tables.emit(tables.multiplication_table(desc, args.threads), args.format)


def cmd_schur(args) -> str:
    p, q = args.p, args.q
    if not 1 <= p <= q:
        raise RangeError(f"need 1 <= p <= q, got p={p}, q={q}")
    desc = RingDescriptor.graded(p, q)
    if args.action == "expand":
        if len(args.args) != 1:
            raise RangeError("expand takes one partition")
        lam = parse_partition(args.args[0])
        poly = jacobi_trudi(lam, p, q)
        if args.format == "json":
            return json.dumps({"partition": lam.format(p), "polynomial": poly.to_string("r"),
                               "terms": {str(list(a)): rational_str(c) for a, c in poly.sorted_terms()}}) + "\n"
        return poly.to_string("r") + "\n"
    if args.action == "convert":
        poly = parse_polynomial(" ".join(args.args), p, "r")
        vec = to_schur(normal_form(desc, poly).coords, p, q)
    else:
        if len(args.args) != 2:
            raise RangeError("multiply takes two partitions")
        vec = schur_multiply(parse_partition(args.args[0]), parse_partition(args.args[1]), desc)
    if args.format == "json":
        return schur_vector_json(vec, p) + "\n"
    return format_schur(vec, p) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    results = verify.run(args.suite, args.max_size)
    ok = all(r.ok for r in results)
    if args.format == "json":
        text = json.dumps({"ok": ok, "suites": [r.to_dict() for r in results]}, indent=2) + "\n"
    else:
        lines = []
        for r in results:
            lines.append(f"{r.name}: {'PASS' if r.ok else 'FAIL'} ({r.checks} checks, {len(r.failures)} failures)")
            lines += [f"  {f['property']}: {f['witness']}" for f in r.failures[:20]]
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_FAIL


def cmd_list(args) -> str:
    reg = catalog.registry()
    if args.format == "json":
        return json.dumps(reg, indent=2) + "\n"
    return "".join(f"{t['name']:<16} {t['label']:<24} {t['family']}\n" for t in reg)


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    try:
        if args.command == "ring":
            text = cmd_ring(args)
        elif args.command == "table":
            text = cmd_table(args)
        elif args.command == "schur":
            text = cmd_schur(args)
        elif args.command == "verify":
            text, code = cmd_verify(args)
        else:
            text = cmd_list(args)
    except InvariantViolation as exc:
        print(f"grasscoh: invariant violated: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except GrasscohError as exc:
        print(f"grasscoh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
