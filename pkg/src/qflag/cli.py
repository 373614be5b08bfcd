"""Command-line entry point: ``python -m qflag <command> ...``.

Value commands print one JSON record; ``verify`` prints one record per check
and exits 0 only if every check passed; ``table`` writes a JSON or CSV grid.
Malformed arguments exit with status 2.
"""

import argparse
import csv
import io
import json
import sys

from . import cyclotomic as cyc
from . import ffspace as ff
from . import qkernel as qk
from . import rogers_szego as rsz
from .errors import QFlagError
from .verify import SUITES, Caps, run_suite

SCHEMA = 1

# hard caps on table grids and flag listings
TABLE_MAX_N = 20
TABLE_MAX_M = 6
RS_TABLE_MAX_N = 12
FLAG_LIST_MAX = 100_000


class UsageError(Exception):
    pass


def _int_list(text):
    try:
        return tuple(int(v) for v in text.split(",") if v.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def record(kind, inputs, value, status=None):
    out = {"schema": SCHEMA, "kind": kind, "inputs": inputs, "value": value}
    if status is not None:
        out["status"] = status
    return out


def _value(poly, q):
    return str(poly) if q is None else poly.evaluate({"q": q})


def cmd_value(args):
    kind = args.command
    if kind == "qbinom":
        if not 0 <= args.k <= args.n:
            raise UsageError(f"need 0 <= k <= n, got n={args.n}, k={args.k}")
        return record(kind, {"n": args.n, "k": args.k, "q": args.q}, _value(qk.qbinomial(args.n, args.k), args.q))
    if kind == "qmultinom":
        return record(kind, {"comp": list(args.comp), "q": args.q}, _value(qk.qmultinomial(args.comp), args.q))
    if kind == "galois":
        return record(kind, {"n": args.n, "q": args.q}, _value(qk.galois(args.n), args.q))
    if kind == "gengal":
        _need_m(args.m)
        return record(kind, {"n": args.n, "m": args.m, "q": args.q}, _value(qk.galois_general(args.n, args.m), args.q))
    if kind == "rs":
        _need_m(args.m)
        poly = rsz.rs_homogeneous(args.n, args.m) if args.homogeneous else rsz.rs(args.n, args.m)
        return record(kind, {"n": args.n, "m": args.m, "homogeneous": args.homogeneous}, str(poly.value))
    if kind == "special":
        _need_m(args.m)
        if args.kind == "roots":
            value = str(cyc.rs_eval_roots(args.n, args.m))
        elif args.kind == "scaled":
            value = str(cyc.rs_eval_roots(args.n, args.m, scaled=True))
        else:
            value = str(cyc.special2_lhs(args.n, args.m))
        return record(kind, {"n": args.n, "m": args.m, "kind": args.kind}, value)
    if kind == "flagcount":
        F = ff.build_field(args.p, args.e)
        comp = qk.Composition(args.comp)
        inputs = {"p": args.p, "e": args.e, "comp": list(comp.parts)}
        if args.list:
            flags = []
            for flag in ff.enumerate_flags(F, comp):
                if len(flags) >= FLAG_LIST_MAX:
                    raise UsageError(f"more than {FLAG_LIST_MAX} flags; refusing to list them")
                flags.append(flag.to_json())
            return record(kind, inputs, {"count": len(flags), "flags": flags})
        return record(kind, inputs, ff.count_flags(F, comp))
    raise UsageError(f"unknown command {kind}")


def _need_m(m):
    if m < 2:
        raise UsageError(f"m must be at least 2, got {m}")


def cmd_verify(args, out):
    fields = None
    if args.q_orders:
        fields = args.q_orders
    elif args.p is not None:
        fields = (args.p,)
    if fields:
        for q in fields:
            ff.field_for_order(q)
    caps = Caps(max_n=args.max_n, max_m=args.max_m, xcap=args.xcap, qcap=args.qcap, fields=fields)
    results = run_suite(args.suite, caps)
    failed = 0
    for r in results:
        out.write(json.dumps(r.to_record(caps.as_dict()), sort_keys=True) + "\n")
        failed += not r.ok
    sys.stderr.write(f"{len(results)} checks, {failed} failed\n")
    return 1 if failed else 0


def table_rows(kind, max_n, max_m, q):
    if max_n > TABLE_MAX_N or max_m > TABLE_MAX_M:
        raise UsageError(f"table caps are n <= {TABLE_MAX_N}, m <= {TABLE_MAX_M}")
    rows = []
    if kind == "qbinom":
        for n in range(max_n + 1):
            for k in range(n + 1):
                rows.append({"n": n, "k": k, "value": _value(qk.qbinomial(n, k), q)})
    elif kind == "galois":
        for n in range(max_n + 1):
            rows.append({"n": n, "value": _value(qk.galois(n), q)})
    elif kind == "gengal":
        for n in range(max_n + 1):
            for m in range(2, max_m + 1):
                rows.append({"n": n, "m": m, "value": _value(qk.galois_general(n, m), q)})
    elif kind == "rs":
        if max_n > RS_TABLE_MAX_N:
            raise UsageError(f"rs tables are capped at n <= {RS_TABLE_MAX_N}")
        for n in range(max_n + 1):
            for m in range(2, max_m + 1):
                rows.append({"n": n, "m": m, "value": str(rsz.rs(n, m).value)})
    return rows


def cmd_table(args):
    rows = table_rows(args.kind, args.max_n, args.max_m, args.q)
    if args.format == "json":
        inputs = {"max_n": args.max_n, "max_m": args.max_m, "q": args.q}
        return json.dumps({"schema": SCHEMA, "kind": args.kind, "inputs": inputs, "rows": rows}, sort_keys=True) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n", quoting=csv.QUOTE_NONE)
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def build_parser():
    parser = argparse.ArgumentParser(prog="qflag", description=__doc__.splitlines()[0])
    parser.add_argument("--out", help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qbinom", help="Gaussian binomial [n choose k]_q")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--q", type=int, help="evaluate at this integer")

    p = sub.add_parser("qmultinom", help="q-multinomial of a composition")
    p.add_argument("--comp", type=_int_list, required=True)
    p.add_argument("--q", type=int)

    p = sub.add_parser("galois", help="Galois number G_n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--q", type=int)

    p = sub.add_parser("gengal", help="generalized Galois number G_n^(m)")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--q", type=int)

    p = sub.add_parser("rs", help="Rogers-Szegő polynomial H_n(t_1..t_(m-1))")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--homogeneous", action="store_true")

    p = sub.add_parser("special", help="special values at roots of unity or fractional powers of q")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--kind", choices=("roots", "scaled", "fractional"), default="roots")

    p = sub.add_parser("flagcount", help="count flags in F_q^n by enumeration")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--comp", type=_int_list, required=True)
    p.add_argument("--list", action="store_true", help="emit the flags themselves")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--max-n", type=_nonneg)
    p.add_argument("--max-m", type=_nonneg)
    p.add_argument("--xcap", type=_nonneg)
    p.add_argument("--qcap", type=_nonneg)
    p.add_argument("--p", type=int, help="use only the prime field F_p")
    p.add_argument("--q", dest="q_orders", type=_int_list, help="comma-separated field orders")

    p = sub.add_parser("table", help="tabulate values over a grid")
    p.add_argument("kind", choices=("qbinom", "galois", "gengal", "rs"))
    p.add_argument("--max-n", type=_nonneg, default=6)
    p.add_argument("--max-m", type=_nonneg, default=4)
    p.add_argument("--q", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "table":
            out.write(cmd_table(args))
        else:
            out.write(json.dumps(cmd_value(args), sort_keys=True) + "\n")
        return 0
    except (UsageError, QFlagError) as exc:
        sys.stderr.write(f"qflag: error: {exc}\n")
        return 2
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
