"""Command-line front end.

    expdioph certify   --ell 5..99 --m 1..10 --r 3..96 [--zmax 8] [--format json|csv|text] [--out PATH]
    expdioph corollary --p 11..97 --m 1..5
    expdioph lehmer    --e 1 --g -1 --n 12 --primitive
    expdioph quadform  --d1 2 --d2 3 --k 5 --zmax 3 {enumerate,classes,represent}

Exit codes: 0 success, 1 usage or input error, 2 a FALSIFIED verdict.
Integer arguments accept a single value or an inclusive range ``a..b``.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
import time

from .certifier import (
    DEFAULT_Z_CAP,
    DEFAULT_Z_MAX,
    Certificate,
    Verdict,
    certify_corollary,
    certify_grid,
)
from .lehmer import LehmerPairError, has_primitive_divisor, lehmer_sequence, make_pair, primitive_part
from .quadform import (
    QuadFormInstance,
    characteristic_number,
    class_key,
    enumerate_solutions,
    least_solution_in_class,
    verify_representation,
)

EXIT_OK, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def int_range(text):
    """Parse ``"7"`` or ``"5..99"`` into a range (inclusive)."""
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer or a..b range: {text!r}") from None
    if hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"empty range: {text!r}")
    return range(lo_i, hi_i + 1)


def _add_report_flags(p):
    p.add_argument("--zmax", type=int, default=DEFAULT_Z_MAX)
    p.add_argument("--zcap", type=int, default=DEFAULT_Z_CAP,
                   help="Z bound for the least-solution search (default %(default)s)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--timing", action="store_true",
                   help="add elapsed seconds to the report (makes output run-dependent)")


def build_parser():
    parser = _Parser(prog="expdioph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("certify", help="certify a grid of (ell, m, r) families")
    p.add_argument("--ell", type=int_range, required=True)
    p.add_argument("--m", type=int_range, required=True)
    p.add_argument("--r", type=int_range, required=True)
    _add_report_flags(p)

    p = sub.add_parser("corollary", help="certify (p, m) mapped to (p, m, 3)")
    p.add_argument("--p", type=int_range, required=True)
    p.add_argument("--m", type=int_range, required=True)
    _add_report_flags(p)

    p = sub.add_parser("lehmer", help="Lehmer numbers and primitive parts")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int_range, required=True)
    p.add_argument("--primitive", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("quadform", help="solutions of D1 X^2 + D2 Y^2 = k^Z")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--zmax", type=int, default=4)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("action", choices=("enumerate", "classes", "represent"))
    return parser


# -- sweep reports -----------------------------------------------------------

CSV_FIELDS = ("ell", "m", "r", "A", "B", "C", "applicable", "steps", "verdict", "oracle_solutions", "reason")


def _record(entry, keys):
    if isinstance(entry, Certificate):
        return entry.to_dict()
    return entry.to_dict(keys)


def render_sweep(command, entries, z_max, fmt, keys=("ell", "m", "r"), elapsed=None):
    records = [_record(e, keys) for e in entries]
    counts = {v.value: 0 for v in Verdict}
    counts["skipped"] = 0
    for rec in records:
        counts[rec["verdict"] if rec["status"] == "certified" else "skipped"] += 1
    summary = {"families": len(records), **counts}
    if elapsed is not None:
        summary["elapsed_seconds"] = round(elapsed, 3)

    if fmt == "json":
        doc = {"command": command, "z_max": z_max, "summary": summary, "records": records}
        return json.dumps(doc, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for entry, rec in zip(entries, records):
            row = dict(rec["params"])
            if rec["status"] == "certified":
                row.update(rec["instance"])
                row.update(applicable=int(rec["applicable"]), steps=entry.step_bitmap(),
                           verdict=rec["verdict"],
                           oracle_solutions=" ".join("(%d,%d,%d)" % tuple(s) for s in rec["oracle_solutions"]))
            else:
                row.update(verdict="skipped", reason=rec["reason"])
            if "p" in row:
                row["ell"] = row.pop("p")
            w.writerow({k: row.get(k, "") for k in CSV_FIELDS})
        return buf.getvalue()
    lines = []
    for entry, rec in zip(entries, records):
        label = " ".join(f"{k}={v}" for k, v in rec["params"].items())
        if rec["status"] == "certified":
            inst = rec["instance"]
            lines.append(f"{label}  A={inst['A']} B={inst['B']} C={inst['C']}  "
                         f"steps={entry.step_bitmap()}  {rec['verdict']}")
        else:
            lines.append(f"{label}  skipped: {rec['reason']}")
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in summary.items()))
    return "\n".join(lines) + "\n"


def _write(text, out):
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _check_sweep_args(args):
    if args.zmax < 2:
        raise UsageError(f"--zmax must be at least 2, got {args.zmax}")
    if args.zcap < 1:
        raise UsageError(f"--zcap must be at least 1, got {args.zcap}")


def _finish_sweep(command, entries, args, keys, started):
    elapsed = time.perf_counter() - started if args.timing else None
    _write(render_sweep(command, entries, args.zmax, args.format, keys, elapsed), args.out)
    falsified = any(isinstance(e, Certificate) and e.verdict is Verdict.FALSIFIED for e in entries)
    return EXIT_FALSIFIED if falsified else EXIT_OK


def cmd_certify(args):
    _check_sweep_args(args)
    started = time.perf_counter()
    entries = certify_grid(itertools.product(args.ell, args.m, args.r), args.zmax, args.zcap)
    return _finish_sweep("certify", entries, args, ("ell", "m", "r"), started)


def cmd_corollary(args):
    _check_sweep_args(args)
    started = time.perf_counter()
    entries = certify_corollary(itertools.product(args.p, args.m), args.zmax, args.zcap)
    return _finish_sweep("corollary", entries, args, ("p", "m"), started)


# -- toolkits ----------------------------------------------------------------

def cmd_lehmer(args):
    try:
        pair = make_pair(args.e, args.g)
    except LehmerPairError as exc:
        raise UsageError(str(exc)) from None
    if args.n.start < 0:
        raise UsageError("--n must be non-negative")
    seq = lehmer_sequence(pair, args.n.stop - 1)
    rows = []
    for n in args.n:
        row = {"n": n, "value": str(seq[n])}
        if args.primitive and n > 1:
            row["primitive_part"] = str(primitive_part(pair, n))
            row["has_primitive_divisor"] = has_primitive_divisor(pair, n)
        rows.append(row)
    if args.format == "json":
        doc = {"E": str(pair.e_val), "G": str(pair.g_val), "F": str(pair.f_val), "terms": rows}
        sys.stdout.write(json.dumps(doc, indent=1) + "\n")
    else:
        print(f"E={pair.e_val} G={pair.g_val} F={pair.f_val}")
        for row in rows:
            line = f"L_{row['n']} = {row['value']}"
            if "primitive_part" in row:
                line += f"  primitive part {row['primitive_part']}  primitive divisor: {str(row['has_primitive_divisor']).lower()}"
            print(line)
    return EXIT_OK


def cmd_quadform(args):
    try:
        inst = QuadFormInstance(args.d1, args.d2, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.zmax < 1:
        raise UsageError("--zmax must be at least 1")
    sols = enumerate_solutions(inst, args.zmax)
    rows = []
    for sol in sols:
        row = {"X": sol.x, "Y": sol.y, "Z": sol.z}
        char = characteristic_number(inst, sol)
        if args.action in ("classes", "represent"):
            row["L"] = char.value
            row["class"] = class_key(inst, char)
        if args.action == "represent":
            least = least_solution_in_class(inst, char, args.zmax)
            rep = verify_representation(inst, least, sol)
            row["least"] = list(least)
            if rep is None:
                row["representation"] = None
            else:
                row.update(t=rep.t, lambda1=rep.lambda1, lambda2=rep.lambda2)
        rows.append(row)
    if args.action == "classes":
        rows.sort(key=lambda r: (r["class"], r["Z"], r["X"]))

    if args.format == "json":
        doc = {"d1": inst.d1, "d2": inst.d2, "k": inst.k, "zmax": args.zmax,
               "action": args.action, "solutions": rows}
        sys.stdout.write(json.dumps(doc, indent=1) + "\n")
        return EXIT_OK
    for row in rows:
        line = f"({row['X']},{row['Y']},{row['Z']})"
        if "class" in row:
            line += f"  L={row['L']}  class ±{row['class']}"
        if args.action == "represent":
            x1, y1, z1 = row["least"]
            if "t" in row:
                line += f"  least=({x1},{y1},{z1})  t={row['t']}  λ₁={row['lambda1']:+d}  λ₂={row['lambda2']:+d}"
            else:
                line += f"  least=({x1},{y1},{z1})  no representation"
        print(line)
    if not rows:
        print(f"no solutions with Z <= {args.zmax}")
    return EXIT_OK


COMMANDS = {
    "certify": cmd_certify,
    "corollary": cmd_corollary,
    "lehmer": cmd_lehmer,
    "quadform": cmd_quadform,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"expdioph {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
