"""Command line interface: ``primexp {exp,census,table1,verify,sets,comb}``."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import combinatorics as cb
from .census import ALL_TAGS, run_census, table1, verify
from .companion import ClassTag, LastRowSpec, build_graph, is_primitive
from .errors import PrimexpError
from .formula import exponent_formula, exponent_set_formula, run_length_clauses
from .oracle import exponent_oracle_bfs, exponent_oracle_power
from .structure import debug_dump
from .table1 import TABLE1


def _tags(text: str | None):
    return [ClassTag.parse(text)] if text else list(ALL_TAGS)


def cmd_exp(args) -> int:
    if args.row is not None:
        spec = LastRowSpec.from_row(args.row, args.loop)
        if args.n is not None and args.n != spec.n:
            raise PrimexpError(f"--n {args.n} disagrees with row length (n={spec.n})")
    else:
        if args.n is None or args.cls is None:
            raise PrimexpError("give either --row or --n, --class and --y")
        spec = LastRowSpec(args.n, ClassTag.parse(args.cls), args.y or "")
    g = build_graph(spec)
    out = {"n": g.n, "class": {"alpha": g.tag.alpha, "eps": g.tag.eps}, "y": g.y}
    out["primitive"] = is_primitive(g)
    if out["primitive"]:
        res = exponent_formula(g)
        out["formula"] = res.value
        out["rule"] = res.rule
        out["oracle"] = exponent_oracle_bfs(g)
        out["power"] = exponent_oracle_power(g)
    out["struct"] = debug_dump(g)
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        print(f"n={g.n} class={g.tag} y={g.y or '-'} primitive={out['primitive']}")
        if out["primitive"]:
            print(f"exp formula={out['formula']} ({out['rule']}) oracle={out['oracle']} power={out['power']}")
        for key in ("v1", "v2", "m", "mo", "se", "h", "h_prime"):
            if key in out["struct"]:
                print(f"  {key}: {out['struct'][key]}")
    return 0


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table_text(censuses) -> str:
    width = max((b for c in censuses for b in c.histogram), default=2)
    cols = list(range(2, max(width, 2) + 1, 2))
    lines = ["n   class  " + " ".join(f"{b:>6}" for b in cols) + "   primitive"]
    for c in censuses:
        cells = " ".join(f"{c.histogram.get(b, ''):>6}" for b in cols)
        lines.append(f"{c.n:<3} {str(c.tag):<6} {cells}   {c.primitive_count}")
    return "\n".join(lines) + "\n"


def cmd_census(args) -> int:
    censuses = [run_census(args.n, tag, args.jobs, cap=args.cap) for tag in _tags(args.cls)]
    if args.format == "json":
        data = [c.to_dict() for c in censuses]
        text = json.dumps(data[0] if len(data) == 1 else data, indent=2) + "\n"
    elif args.format == "csv":
        from io import StringIO

        buf = StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "alpha", "eps", "exponent", "count"])
        for c in censuses:
            w.writerows(c.csv_rows())
        text = buf.getvalue()
    else:
        text = _table_text(censuses)
    _write(text, args.out)
    return 0


def cmd_table1(args) -> int:
    report = table1(range(args.lo, args.hi + 1), args.jobs)
    sys.stdout.write(_table_text(report.censuses))
    for c in report.failures:
        print(f"MISMATCH {c.name}: published {c.expected} census {c.actual}", file=sys.stderr)
    if args.check:
        checked = sum(1 for n in range(args.lo, args.hi + 1) for t in ALL_TAGS if (n, (t.alpha, t.eps)) in TABLE1)
        print(f"checked {checked} blocks, {len(report.failures)} mismatches", file=sys.stderr)
        return 1 if report.failures else 0
    return 0


def cmd_verify(args) -> int:
    report = verify(range(args.lo, args.hi + 1), jobs=args.jobs)
    bad = 0
    for c in report.censuses:
        status = "ok" if not c.mismatches else f"{len(c.mismatches)} MISMATCHES"
        print(f"n={c.n:<3} class={c.tag}  primitive={c.primitive_count:<6} {status}")
        if c.mismatches:
            bad += 1
            for m in c.mismatches[:5]:
                print("   ", json.dumps(m))
    return min(bad, 125)


def cmd_sets(args) -> int:
    if args.k is not None:
        c = run_census(args.n, ClassTag(1, 0), args.jobs)
        got = sorted(c.by_m.get(args.k, {}))
        print(f"census E(PSC_{{{args.n},{args.k}}}^{{1,0}}) = {got}")
        clauses = run_length_clauses(args.n, args.k)
        if not clauses:
            print("  no clause covers this (n, k)")
        for i, (cid, values) in enumerate(clauses):
            print(f"  clause {cid}: {sorted(values)}" + ("  (applied)" if i == 0 else ""))
        return 0
    for tag in ALL_TAGS:
        c = run_census(args.n, tag, args.jobs)
        predicted = sorted(exponent_set_formula(args.n, tag)) if args.n >= 4 else None
        mark = "" if predicted is None or predicted == sorted(c.exponent_set) else "  MISMATCH"
        print(f"class {tag}: census {sorted(c.exponent_set)} formula {predicted}{mark}")
    return 0


def cmd_comb(args) -> int:
    if args.what == "f":
        print(cb.f_count(args.n, args.q, args.k))
    elif args.what == "t":
        print(cb.t_count(args.r, args.n))
    else:
        tag = ClassTag.parse(args.cls)
        n, b = args.n, args.b
        if tag == ClassTag(1, 1):
            print(cb.n11_count(n, b))
        elif tag == ClassTag(0, 1):
            print(cb.n01_count(n, b))
        elif tag == ClassTag(1, 0):
            top = max(x for x in range(2, n) if x % 2 == 0) if n >= 3 else None
            value = cb.n10_lowest(n) if b == 2 else cb.n10_extremal(n) if b == top else None
            if value is None:
                print(f"no closed form for N_{n}^1,0({b})", file=sys.stderr)
                return 2
            print(value)
        else:
            if b == 2 * n - 4:
                print(cb.n00_extremal(n))
            elif b == 4 and cb.n00_lowest_bounds(n) is not None:
                lo, hi = cb.n00_lowest_bounds(n)
                print(f"{lo}..{hi}")
            else:
                print(f"no closed form for N_{n}^0,0({b})", file=sys.stderr)
                return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="primexp", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    jobs_default = os.cpu_count() or 1

    e = sub.add_parser("exp", help="exponent of one matrix by formula and by oracle")
    e.add_argument("--n", type=int)
    e.add_argument("--class", dest="cls")
    e.add_argument("--y", default=None)
    e.add_argument("--row", help="a_{n,1}..a_{n,n-1} as a bit string")
    e.add_argument("--loop", action="store_true", help="set a_{n,n} = 1 (with --row)")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_exp)

    c = sub.add_parser("census", help="exhaustive exponent histogram")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--class", dest="cls")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--format", choices=("json", "csv", "table"), default="table")
    c.add_argument("--out")
    c.add_argument("--cap", type=int, default=16)
    c.set_defaults(func=cmd_census)

    t = sub.add_parser("table1", help="regenerate the published histogram table")
    t.add_argument("--from", dest="lo", type=int, default=3)
    t.add_argument("--to", dest="hi", type=int, default=10)
    t.add_argument("--check", action="store_true")
    t.add_argument("--jobs", type=int, default=1)
    t.set_defaults(func=cmd_table1)

    v = sub.add_parser("verify", help="formula against both oracles on every matrix")
    v.add_argument("--from", dest="lo", type=int, default=4)
    v.add_argument("--to", dest="hi", type=int, required=True)
    v.add_argument("--jobs", type=int, default=jobs_default)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sets", help="exponent sets, census against formula")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_sets)

    cm = sub.add_parser("comb", help="string counts and closed-form matrix counts")
    csub = cm.add_subparsers(dest="what", required=True)
    f = csub.add_parser("f")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--q", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    tt = csub.add_parser("t")
    tt.add_argument("--r", type=int, required=True)
    tt.add_argument("--n", type=int, required=True)
    cc = csub.add_parser("count")
    cc.add_argument("--class", dest="cls", required=True)
    cc.add_argument("--n", type=int, required=True)
    cc.add_argument("--b", type=int, required=True)
    cm.set_defaults(func=cmd_comb)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PrimexpError as exc:
        print(f"primexp: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
