"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 computation error, 3 a catalog
verification row has status FAIL.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog, cycles as cy
from .errors import LojaxError
from .exact import format_rational
from .graph import parse_graph, validate
from .poly import (
    LEX,
    GREVLEX,
    basis_colength,
    basis_power_membership,
    buchberger,
    jacobian_minors,
    parse_ideal,
)
from .weighted import WeightSystem, haraux_bounds, weighted_loj

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _jsonable(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, cy.Cycle):
        return str(v)
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, float) and v == float("inf"):
        return "infinite"
    return v


def _text(v) -> str:
    v = _jsonable(v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if isinstance(v, list):
        return ", ".join(_text(x) for x in v) if v and not isinstance(v[0], (dict, list)) else ""
    return str(v)


def _emit(out, data: dict, fmt: str):
    if fmt == "json":
        out.write(json.dumps(_jsonable(data), indent=2) + "\n")
        return
    for key, val in data.items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            out.write(f"{key}:\n")
            for item in val:
                out.write("  " + "  ".join(f"{k}={_text(x)}" for k, x in item.items()) + "\n")
        elif isinstance(val, dict):
            out.write(f"{key}:\n")
            for k, x in val.items():
                out.write(f"  {k}: {_text(x)}\n")
        else:
            out.write(f"{key}: {_text(val)}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _rationals(text: str) -> tuple:
    try:
        return tuple(Fraction(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated rationals, got {text!r}") from None


# --------------------------------------------------------------------------
# verbs


def cmd_graph(args):
    g = parse_graph(_read(args.file), check=False)
    rep = validate(g)
    data = {
        "name": g.name,
        "vertices": g.vertex_count,
        "weights": list(g.weights),
        "edges": [f"{i + 1}-{j + 1}" for i, j in g.sorted_edges()],
        "connected": rep.connected,
        "negative_definite": rep.negative_definite,
        "leading_minors": [int(m) for m in rep.leading_minors],
    }
    if not rep.ok:
        data["problems"] = list(rep.problems)
        return data, EXIT_COMPUTE
    z = cy.artin_cycle(g)
    data["artin_cycle"] = z
    data["multiplicity"] = cy.multiplicity(z)
    return data, EXIT_OK


def cmd_divisor_info(args):
    g = parse_graph(_read(args.file))
    d = cy.parse_cycle(g, args.cycle)
    cert = cy.is_antinef(d)
    data = {
        "cycle": d,
        "products": list(cy.products(d)),
        "anti_nef": bool(cert),
    }
    if cert:
        data["contact_vertices"] = [i + 1 for i in cert.contact_vertices]
        data["length"] = cy.length(d)
        data["multiplicity"] = cy.multiplicity(d)
        data["qplus_coefficients"] = list(cy.qplus_coefficients(d))
    else:
        data["reason"] = str(cert)
    data["L0"] = cy.loj_exponent(d)
    return data, EXIT_OK


def cmd_divisor_rel(args):
    g = parse_graph(_read(args.file))
    a, b = cy.parse_cycle(g, args.cycle_i), cy.parse_cycle(g, args.cycle_j)
    return {
        "cycle_i": a,
        "cycle_j": b,
        "relative_exponent": cy.loj_relative(a, b),
        "mixed_multiplicity": cy.mixed_multiplicity(a, b),
        "meet": cy.meet(a, b),
    }, EXIT_OK


def cmd_enumerate(args):
    g = parse_graph(_read(args.file))
    found = cy.enumerate_antinef(g, args.max_length, cap=args.cap)
    rows = [{"cycle": e.cycle, "length": e.length, "L0": e.loj_exponent} for e in found]
    return {"graph": g.name, "max_length": args.max_length, "count": len(rows), "cycles": rows}, EXIT_OK


def cmd_qgens(args):
    g = parse_graph(_read(args.file))
    qs = cy.q_generators(g)
    rows = [
        {"vertex": i + 1, "cycle": f, "scale": k, "length": cy.length(f), "L0": cy.loj_exponent(f)}
        for i, (f, k) in enumerate(zip(qs.generators, qs.scales))
    ]
    return {"graph": g.name, "generators": rows}, EXIT_OK


def cmd_weighted(args):
    ws = WeightSystem(_rationals(args.weights), _rationals(args.degree)[0])
    branch = 1 if all(2 * w <= ws.degree for w in ws.weights) else 2
    return {"weights": list(ws.weights), "degree": ws.degree, "branch": branch, "L0": weighted_loj(ws)}, EXIT_OK


def cmd_haraux(args):
    ideal = parse_ideal(_read(args.file))
    ws = WeightSystem(_rationals(args.weights))
    hb = haraux_bounds(ideal.generators, ws, args.minor_size)
    return {
        "weights": list(ws.weights),
        "f_degrees": list(hb.f_degrees),
        "minor_degrees": sorted(hb.minor_degrees),
        "min_d": hb.min_degree,
        "max_d": hb.max_degree,
        "lower": hb.lower,
        "upper": hb.upper,
    }, EXIT_OK


def cmd_groebner(args):
    ideal = parse_ideal(_read(args.file))
    gens = list(ideal.generators)
    if args.with_minors:
        gens += jacobian_minors(ideal.generators, args.with_minors)
    order = LEX if args.order == "lex" else GREVLEX
    basis = buchberger(gens, order)
    names = ideal.variables
    data = {
        "order": args.order,
        "generators": len(gens),
        "basis": [g.to_str(names, order) for g in basis],
        "leading_monomials": [_mono(lm, names) for lm in basis.leading_monomials()],
    }
    if args.colength:
        data["colength"] = basis_colength(basis)
    for p in args.power_membership or ():
        data[f"m^{p} contained"] = basis_power_membership(basis, p)
    return data, EXIT_OK


def _mono(e, names):
    return "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k) or "1"


def cmd_catalog_list(args):
    rows = []
    for name in catalog.list_entries(args.max_param):
        e = catalog.load_entry(name)
        rows.append({"name": name, "label": e.label, "kind": e.kind})
    return {"entries": rows}, EXIT_OK


def cmd_catalog_dump(args):
    return catalog.dump_entry(catalog.load_entry(args.name)), EXIT_OK


def cmd_catalog_verify(args):
    if args.all:
        reports = catalog.verify_all(args.max_param)
    elif args.name:
        reports = [catalog.verify_entry(args.name)]
    else:
        raise UsageError("catalog verify: give an entry name or --all")
    data = {
        "reports": [
            {
                "name": r.name,
                "summary": r.summary(),
                "rows": [
                    {"check": x.check, "expected": x.expected, "computed": x.computed, "status": x.status, "note": x.note}
                    for x in r.rows
                ],
            }
            for r in reports
        ],
        "fail": sum(r.count(catalog.FAIL) for r in reports),
        "known_discrepancy": sum(r.count(catalog.KNOWN) for r in reports),
        "pass": sum(r.count(catalog.PASS) for r in reports),
    }
    return data, EXIT_VERIFY if data["fail"] else EXIT_OK


def _emit_verify(out, data, fmt):
    if fmt == "json":
        _emit(out, data, fmt)
        return
    for r in data["reports"]:
        out.write(r["summary"] + "\n")
        for x in r["rows"]:
            line = f"  {x['status']:<17} {x['check']}: expected {x['expected']}, computed {x['computed']}"
            if x["note"]:
                line += f"  [{x['note']}]"
            out.write(line + "\n")
    out.write(f"total: {data['pass']} PASS, {data['fail']} FAIL, {data['known_discrepancy']} KNOWN-DISCREPANCY\n")


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    p = _Parser(prog="lojax", description="Lojasiewicz exponents of rational surface singularities.", parents=[common])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    g = sub.add_parser("graph", help="resolution graph analysis")
    gs = g.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ga = gs.add_parser("analyze", parents=[common])
    ga.add_argument("file")
    ga.set_defaults(func=cmd_graph)

    d = sub.add_parser("divisor", help="invariants of cycles")
    ds = d.add_subparsers(dest="action", required=True, parser_class=_Parser)
    di = ds.add_parser("info", parents=[common])
    di.add_argument("file")
    di.add_argument("cycle")
    di.set_defaults(func=cmd_divisor_info)
    dr = ds.add_parser("rel", parents=[common])
    dr.add_argument("file")
    dr.add_argument("cycle_i")
    dr.add_argument("cycle_j")
    dr.set_defaults(func=cmd_divisor_rel)

    e = sub.add_parser("enumerate", parents=[common], help="anti-nef cycles up to a length")
    e.add_argument("file")
    e.add_argument("--max-length", type=int, required=True)
    e.add_argument("--cap", type=int, default=None)
    e.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("qgens", parents=[common], help="Q-generators of the anti-nef cone")
    q.add_argument("file")
    q.set_defaults(func=cmd_qgens)

    w = sub.add_parser("weighted", parents=[common], help="weighted homogeneous exponent")
    w.add_argument("--weights", required=True)
    w.add_argument("--degree", required=True)
    w.set_defaults(func=cmd_weighted)

    h = sub.add_parser("haraux", parents=[common], help="quasi-degree bounds for a map germ")
    h.add_argument("file")
    h.add_argument("--weights", required=True)
    h.add_argument("--minor-size", type=int, required=True)
    h.set_defaults(func=cmd_haraux)

    gb = sub.add_parser("groebner", parents=[common], help="reduced Groebner basis of an ideal file")
    gb.add_argument("file")
    gb.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    gb.add_argument("--with-minors", type=int, default=0, metavar="S", help="append the S x S Jacobian minors")
    gb.add_argument("--colength", action="store_true")
    gb.add_argument("--power-membership", type=int, action="append", metavar="P")
    gb.set_defaults(func=cmd_groebner)

    c = sub.add_parser("catalog", help="built-in data")
    cs = c.add_subparsers(dest="action", required=True, parser_class=_Parser)
    cl = cs.add_parser("list", parents=[common])
    cl.add_argument("--max-param", type=int, default=3)
    cl.set_defaults(func=cmd_catalog_list)
    cd = cs.add_parser("dump", parents=[common])
    cd.add_argument("name")
    cd.set_defaults(func=cmd_catalog_dump)
    cv = cs.add_parser("verify", parents=[common])
    cv.add_argument("name", nargs="?")
    cv.add_argument("--all", action="store_true")
    cv.add_argument("--max-param", type=int, default=3)
    cv.set_defaults(func=cmd_catalog_verify)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        fmt = getattr(args, "format", "text")
        data, code = args.func(args)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (LojaxError, ValueError, ArithmeticError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_COMPUTE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    if args.func is cmd_catalog_verify:
        _emit_verify(out, data, fmt)
    else:
        _emit(out, data, fmt)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
