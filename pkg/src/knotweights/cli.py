"""Command-line entry point.

Subcommands: enumerate, dim, weight, wbcr, verify, alexander.  Tables go
to stdout; --json switches every subcommand to a stable machine format.
Verification subcommands exit 0 only when every checked identity holds;
usage errors exit 2.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import cache
from .alexander import alexander_by_skein, alexander_poly
from .bridge import verify_main, verify_stu, wbcr
from .conway import wc_eval, wc_prime_eval
from .enumerate import K_MAX, enumerate_bcr, enumerate_jacobi
from .errors import DiagramError
from .jacobi import key_bytes, wheel
from .pd import parse_pd
from .psi import verify_wc_psi
from .quotient import dims_table
from .serialize import from_json, jacobi_to_obj, bcr_to_obj
from .series import conway_series, exp_substitute, zbcr_series
from .vectors import vector_of


def _frac(x):
    return str(Fraction(x))


def _emit(obj, as_json):
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_enumerate(args):
    if args.kind == "bcr":
        diagrams = cache.cached(
            "enumerate-bcr", args.degree,
            lambda: [bcr_to_obj(d) for d in
                     enumerate_bcr(args.degree, k_max=args.k_max)],
            enabled=not args.no_cache)
    else:
        diagrams = cache.cached(
            "enumerate-jacobi", args.degree,
            lambda: [jacobi_to_obj(d) for d in
                     enumerate_jacobi(args.degree, k_max=args.k_max)],
            enabled=not args.no_cache)
    if args.json:
        _emit({"kind": args.kind, "degree": args.degree,
               "count": len(diagrams), "diagrams": diagrams}, True)
    else:
        print(f"{args.kind} diagrams of degree {args.degree}: "
              f"{len(diagrams)} classes")
        for i, obj in enumerate(diagrams):
            edges = ["{}-{}{}".format(e["from"], e["to"],
                                      "" if e["class"] in ("plain",)
                                      else ":" + e["class"][0])
                     for e in obj["edges"]]
            print(f"  [{i}] " + " ".join(edges))
    return 0


def cmd_dim(args):
    table = cache.cached("dims", args.degree,
                         lambda: dims_table(args.degree, k_max=args.k_max),
                         enabled=not args.no_cache)
    if args.json:
        _emit(table, True)
    else:
        print(f"degree {table['degree']}:")
        print(f"  dim A = {table['dim_A']}")
        print(f"  dim P = {table['dim_P']}   (connected, with a leg)")
        print(f"  dim N = {table['dim_N']}   (products)")
        print(f"  dim T = {table['dim_T']}   (trivalent components)")
    return 0


def cmd_weight(args):
    d = from_json(Path(args.diagram).read_text())
    vec = vector_of(d)
    value = wc_eval(vec) if args.system == "wc" else wc_prime_eval(vec)
    if args.json:
        _emit({"system": args.system, "value": _frac(value)}, True)
    else:
        print(_frac(value))
    return 0


def cmd_wbcr(args):
    d = from_json(Path(args.diagram).read_text())
    value = wbcr(d, k_max=args.k_max)
    if args.json:
        _emit({"wbcr": _frac(value)}, True)
    else:
        print(_frac(value))
    return 0


def _report(rows, label, as_json, key_fields):
    ok = all(r["equal"] for r in rows)
    if as_json:
        out = []
        for r in rows:
            row = {"equal": r["equal"]}
            for f in key_fields:
                v = r.get(f)
                row[f] = _frac(v) if isinstance(v, Fraction) else str(v)
            out.append(row)
        _emit({"check": label, "rows": out, "pass": ok}, True)
    else:
        n_bad = sum(1 for r in rows if not r["equal"])
        print(f"{label}: {len(rows)} checks, {n_bad} failures")
        for r in rows:
            if not r["equal"]:
                print("  FAIL " + " ".join(
                    f"{f}={r.get(f)}" for f in key_fields))
    return 0 if ok else 1


def cmd_verify(args):
    k = args.degree
    if args.what == "prop32":
        rows = cache.cached(
            "verify-prop32", k,
            lambda: verify_main(k, k_max=args.k_max),
            enabled=not args.no_cache)
        for r in rows:
            r["class"] = key_bytes(r["key"]).decode()
        return _report(rows, f"wbcr == -wc' at degree {k}", args.json,
                       ["class", "wbcr", "minus_wc_prime"])
    if args.what == "stu":
        rows = cache.cached("verify-stu", k,
                            lambda: verify_stu(k, k_max=args.k_max),
                            enabled=not args.no_cache)
        return _report(rows, f"wbcr STU/AS compatibility at degree {k}",
                       args.json, ["kind"])
    if args.what == "wcpsi":
        rows = cache.cached("verify-wcpsi", k,
                            lambda: verify_wc_psi(k, k_max=args.k_max),
                            enabled=not args.no_cache)
        return _report(rows, f"wc o substitution == wc at degree {k}",
                       args.json, ["lhs", "rhs"])
    if args.what == "lemma33":
        w = wheel(k)
        got = wbcr(w, k_max=max(args.k_max, k))
        want = Fraction(1 + (-1) ** k)
        rows = [{"equal": got == want, "wbcr": got, "expected": want}]
        if not args.json:
            print(f"wbcr(wheel_{k}) = {_frac(got)} (expected {_frac(want)})")
        return _report(rows, f"wheel weight at degree {k}", args.json,
                       ["wbcr", "expected"])
    raise AssertionError(args.what)


def cmd_alexander(args):
    pd = parse_pd(Path(args.pd).read_text())
    delta = alexander_poly(pd)
    assert delta == alexander_by_skein(pd)
    out = {"delta": str(delta)}
    if not args.json:
        print(f"Delta(t) = {delta}")
    if args.series:
        K = args.series
        s = exp_substitute(delta, K)
        out["series"] = [str(s[i]) for i in range(K + 1)]
        if not args.json:
            print(f"Delta(e^h) = {s}")
        if args.zbcr:
            z = zbcr_series(delta, K)
            out["zbcr"] = {str(k): str(v) for k, v in z.items()}
            c = conway_series(delta, K)
            out["conway"] = {str(k): str(v) for k, v in c.items()}
            if not args.json:
                for k in sorted(z):
                    print(f"  Z_{k} = {z[k]}")
    _emit(out, args.json)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="machine-readable output")
    common.add_argument("--no-cache", action="store_true",
                        help="recompute instead of using the disk cache")
    common.add_argument("--k-max", type=int, default=K_MAX,
                        help=f"largest supported degree (default {K_MAX})")

    p = argparse.ArgumentParser(
        prog="knotweights",
        description="Diagram enumeration, weight systems, and Alexander "
                    "series, all in exact rational arithmetic.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", parents=[common],
                       help="list diagram classes")
    e.add_argument("kind", choices=["bcr", "jacobi"])
    e.add_argument("--degree", type=int, required=True)
    e.set_defaults(func=cmd_enumerate)

    d = sub.add_parser("dim", parents=[common],
                       help="dimensions of one degree")
    d.add_argument("--degree", type=int, required=True)
    d.set_defaults(func=cmd_dim)

    w = sub.add_parser("weight", parents=[common],
                       help="evaluate a weight system")
    w.add_argument("--system", choices=["wc", "wcp"], required=True)
    w.add_argument("--diagram", required=True, help="diagram JSON file")
    w.set_defaults(func=cmd_weight)

    b = sub.add_parser("wbcr", parents=[common],
                       help="signed source count of a diagram")
    b.add_argument("--diagram", required=True, help="diagram JSON file")
    b.set_defaults(func=cmd_wbcr)

    v = sub.add_parser("verify", parents=[common],
                       help="run one verification suite")
    v.add_argument("what", choices=["prop32", "stu", "wcpsi", "lemma33"])
    v.add_argument("--degree", type=int, required=True)
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("alexander", parents=[common],
                       help="Alexander polynomial tools")
    a.add_argument("--pd", required=True, help="PD code file")
    a.add_argument("--series", type=int, metavar="K",
                   help="expand Delta(e^h) to order K")
    a.add_argument("--zbcr", action="store_true",
                   help="also print the degree-k log coefficients")
    a.set_defaults(func=cmd_alexander)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
