"""Command-line interface.

Subcommands: analyze (pair -> report), search (family generator), frobenius
(trace-table dump), matrix (residue matrix and its nine-line extension),
validate-criterion (the GL2 subgroup oracle).  JSON goes to stdout; exit
code 0 on any completed analysis, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .curves import CurveLW, CurveRT2, frobenius_table
from .gl2 import validate_surjectivity_criterion
from .report import (
    CurveInput,
    CurvePairSpec,
    InputError,
    analyze,
    parse_pair_spec,
    render_report,
    search_family,
)
from .residues import extend_residue_matrix, kernel_dimension, residue_matrix


def _parse_curve_flag(text: str, six_torsion: str | None = None) -> CurveInput:
    """Inline curve syntax: 'rt2:a,b' or 'w:a1,a2,a3,a4,a6' ('num/den' ok)."""
    try:
        kind, _, rest = text.partition(":")
        parts = [p.strip() for p in rest.split(",")]
        point = None
        if six_torsion:
            x, y = (Fraction(v) for v in six_torsion.split(","))
            point = (x, y)
        if kind == "rt2":
            a, b = (int(p) for p in parts)
            return CurveInput("rt2", CurveRT2(a, b).to_lw(), (a, b), point)
        if kind == "w":
            coeffs = [Fraction(p) for p in parts]
            if len(coeffs) != 5:
                raise ValueError("weierstrass needs 5 coefficients")
            return CurveInput("weierstrass", CurveLW(*coeffs), None, point)
        raise ValueError(f"unknown curve syntax {text!r}; use rt2:a,b or w:a1,..,a6")
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise InputError(str(e)) from e


def _cmd_analyze(args) -> int:
    if args.pair:
        with open(args.pair, "r", encoding="utf-8") as fh:
            spec = parse_pair_spec(json.load(fh))
        # explicit flags override the file, absent flags leave it alone
        if args.bound_B is not None or args.ell_max is not None:
            spec = CurvePairSpec(
                spec.first, spec.second,
                spec.bound if args.bound_B is None else args.bound_B,
                spec.ell_max if args.ell_max is None else args.ell_max,
                spec.odd_primes)
    else:
        if not (args.first and args.second):
            raise InputError("give --pair FILE or both --first and --second")
        first = _parse_curve_flag(args.first, args.six_torsion_first)
        second = _parse_curve_flag(args.second, args.six_torsion_second)
        odd = tuple(int(x) for x in args.odd_primes.split(",")) if args.odd_primes else ()
        spec = CurvePairSpec(first, second,
                             10_000 if args.bound_B is None else args.bound_B,
                             37 if args.ell_max is None else args.ell_max,
                             odd)
    report = analyze(spec)
    sys.stdout.write(render_report(report, args.format))
    return 0


def _cmd_search(args) -> int:
    pairs = search_family(args.count, args.seed)
    if args.format == "text":
        for p in pairs:
            a, b = p.first.rt2_raw
            a2, b2 = p.second.rt2_raw
            sys.stdout.write(f"(a, b, a', b') = ({a}, {b}, {a2}, {b2})\n")
    else:
        sys.stdout.write(json.dumps(
            [p.echo() for p in pairs], sort_keys=True, indent=2) + "\n")
    return 0


def _cmd_frobenius(args) -> int:
    curve = _parse_curve_flag(args.curve)
    bound = 10_000 if args.bound_B is None else args.bound_B
    table = frobenius_table(curve.lw, bound)
    if args.format == "text":
        sys.stdout.write(f"curve {table.curve}, good primes up to {table.bound}\n")
        for p, t in table.entries:
            sys.stdout.write(f"  a_{p} = {t}\n")
    else:
        sys.stdout.write(json.dumps({
            "curve": table.curve,
            "bound": table.bound,
            "entries": {str(p): t for p, t in table.entries},
        }, sort_keys=True, indent=2) + "\n")
    return 0


def _cmd_matrix(args) -> int:
    try:
        a, b, a2, b2 = (int(x) for x in args.pair.split(","))
    except ValueError as e:
        raise InputError("matrix needs --pair a,b,a',b'") from e
    m = residue_matrix(a, b, a2, b2)
    ext = extend_residue_matrix(m)
    d, basis = kernel_dimension(m)
    if args.format == "text":
        sys.stdout.write(f"residue matrix for (a, b, a', b') = ({a}, {b}, {a2}, {b2})\n")
        sys.stdout.write("columns: " + ", ".join(m.columns) + "\n")
        from .residues import ALGEBRA_LABELS
        for label, row in zip(ALGEBRA_LABELS, m.representative_rows()):
            sys.stdout.write(f"  {label:9s} " + " ".join(f"{v:6d}" for v in row) + "\n")
        sys.stdout.write("nine-line extension columns: " + ", ".join(ext.columns) + "\n")
        for label, row in zip(ALGEBRA_LABELS, ext.representative_rows()):
            sys.stdout.write(f"  {label:9s} " + " ".join(f"{v:6d}" for v in row) + "\n")
        sys.stdout.write(f"d = {d}; kernel basis: {basis}\n")
    else:
        sys.stdout.write(json.dumps({
            "pair": [a, b, a2, b2],
            "columns": list(m.columns),
            "rows": m.representative_rows(),
            "extended_columns": list(ext.columns),
            "extended_rows": ext.representative_rows(),
            "d": d,
            "kernel_basis": [list(s) for s in basis],
        }, sort_keys=True, indent=2) + "\n")
    return 0


def _cmd_validate_criterion(args) -> int:
    result = validate_surjectivity_criterion(args.ell)
    payload = {
        "ell": result.ell,
        "group_order": result.group_order,
        "subgroup_count": result.subgroup_count,
        "offending_proper_subgroups": list(result.offending_proper_subgroups),
        "full_group_witnesses": {
            "nonsplit": result.full_group.has_nonsplit,
            "split": result.full_group.has_split,
            "generic": result.full_group.has_generic,
        },
        "notes": list(result.notes),
        "passed": result.passed,
    }
    if args.format == "text":
        sys.stdout.write(
            f"ell = {result.ell}: {'PASS' if result.passed else 'FAIL'} "
            f"({result.subgroup_count} subgroups of a group of order "
            f"{result.group_order})\n")
        for n in result.notes:
            sys.stdout.write(f"  note: {n}\n")
    else:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummer-brauer",
        description="Brauer group reports for Kummer surfaces of E x E' over Q")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--bound-B", type=int, default=None,
                       help="prime bound for trace sampling (default 10000)")
        p.add_argument("--ell-max", type=int, default=None,
                       help="largest ell for surjectivity sampling (default 37)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=0,
                       help="enumeration offset for deterministic generators")

    p = sub.add_parser("analyze", help="analyze a curve pair")
    p.add_argument("--pair", help="JSON file with a pair spec")
    p.add_argument("--first", help="inline curve, rt2:a,b or w:a1,a2,a3,a4,a6")
    p.add_argument("--second", help="inline curve")
    p.add_argument("--six-torsion-first", help="x,y point of order 6 on the first curve")
    p.add_argument("--six-torsion-second", help="x,y point of order 6 on the second curve")
    p.add_argument("--odd-primes", help="comma-separated odd primes for congruence evidence")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("search", help="generate family curve pairs")
    p.add_argument("--count", type=int, default=1)
    common(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("frobenius", help="dump a Frobenius trace table")
    p.add_argument("--curve", required=True, help="rt2:a,b or w:a1,a2,a3,a4,a6")
    common(p)
    p.set_defaults(func=_cmd_frobenius)

    p = sub.add_parser("matrix", help="print the residue matrix and its extension")
    p.add_argument("--pair", required=True, help="a,b,a',b'")
    common(p)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("validate-criterion", help="run the GL2 subgroup oracle")
    p.add_argument("--ell", type=int, required=True, choices=(3, 5))
    common(p)
    p.set_defaults(func=_cmd_validate_criterion)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        sys.stderr.write(f"input error: {e}\n")
        return 2
    except (OSError, json.JSONDecodeError) as e:
        sys.stderr.write(f"input error: {e}\n")
        return 2
    except ValueError as e:
        sys.stderr.write(f"input error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
