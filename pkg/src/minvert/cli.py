"""Command-line interface.

Subcommands: describe, pairs, singular, solve, tables, classify, check-all.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .affinevert import format_pbw_vector, sigma_embed, singular_level_of_power, solve_affine_singular
from .chevalley import build_lie_algebra
from .minimal_data import (
    DELIGNE_SERIES,
    central_charge,
    collapse_verdict,
    deligne_level,
    g_natural,
    lisse_verdict,
    minimal_grading,
)
from .rootsys import SimpleType, build_root_system
from .symmod import solve_highest_weight_vector, theta_pairs
from .tables import emit_table
from .verify import CRITERIA, run_all


class UsageError(Exception):
    pass


def _parse_simple_type(name: str) -> SimpleType:
    try:
        return SimpleType(name[0].upper(), int(name[1:]))
    except (ValueError, IndexError) as e:
        raise UsageError(f"bad type {name!r}: {e}")


def _parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad rational {s!r}: {e}")


def _root_str(root) -> str:
    sep = "" if all(abs(c) < 10 for c in root) else ","
    return "(" + sep.join(str(c) for c in root) + ")"


def cmd_describe(args, out):
    t = _parse_simple_type(args.type)
    rs = build_root_system(t)
    L = build_lie_algebra(rs)
    grading = minimal_grading(L)
    dims = [len(grading.pieces[j]) for j in (-2, -1, 0, 1, 2)]
    out(f"type {t}")
    out(f"dual coxeter number: {rs.h_dual}")
    out(f"dim g: {L.dim}")
    out(f"dim minimal orbit: {2 * rs.h_dual - 2}")
    out(f"grading dims (j = -1,-1/2,0,1/2,1): {dims}")
    for s in g_natural(L):
        if s.index == 0:
            kind = "center (dim {})".format(s.dim)
            lev = s.level_poly.format() if s.level_poly is not None else "-"
        else:
            kind = f"{s.type} (dim {s.dim}), theta_{s.index} = {_root_str(s.theta_i)}"
            lev = s.level_poly.format()
        out(f"g_{s.index}: {kind}; k_{s.index} = {lev}")
    if (t.series, t.rank) in DELIGNE_SERIES:
        lev = deligne_level(rs)
        out(f"deligne level: {lev}; central charge there: {central_charge(rs, lev)}")
    return 0


def cmd_pairs(args, out):
    t = _parse_simple_type(args.type)
    L = build_lie_algebra(build_root_system(t))
    summands = [s for s in g_natural(L) if s.index > 0]
    if not summands:
        raise UsageError(f"type {t} has no simple summand in g^natural")
    i = args.summand
    if i not in [s.index for s in summands]:
        raise UsageError(f"no summand {i} for type {t}")
    pl = theta_pairs(L, i)
    out(f"theta - theta_{i} = {_root_str(pl.target)}; {len(pl.pairs)} pairs")
    for b, d in pl.pairs:
        out(f"  {_root_str(b)}, {_root_str(d)}")
    return 0


def _hw_vector(L, i):
    rs = L.rs
    summands = [s for s in g_natural(L) if s.index > 0]
    su = next((s for s in summands if s.index == i), None)
    if su is None:
        raise UsageError(f"no summand {i} for this type")
    mu = rs.root_to_weight(tuple(a + b for a, b in zip(rs.theta, su.theta_i)))
    return solve_highest_weight_vector(L, mu)


def cmd_singular(args, out):
    t = _parse_simple_type(args.type)
    L = build_lie_algebra(build_root_system(t))
    w = _hw_vector(L, args.summand)
    try:
        level = singular_level_of_power(L, w, args.power)
    except RuntimeError as e:
        out(f"verification failed: {e}")
        return 1
    out(f"sigma(w_{args.summand})^{args.power + 1} is singular exactly at k = {level}")
    out(f"w_{args.summand} support: {len(w)} monomials; "
        f"sigma image support: {len(sigma_embed(L, w))}")
    return 0


def cmd_solve(args, out):
    t = _parse_simple_type(args.type)
    L = build_lie_algebra(build_root_system(t))
    coords = [_parse_rational(c) for c in args.weight.split(",")]
    if len(coords) != L.rs.rank:
        raise UsageError(f"weight needs {L.rs.rank} coordinates")
    sols = solve_affine_singular(L, tuple(coords), args.degree)
    if not sols:
        out("no singular vectors")
        return 0
    for s in sols:
        out(f"level {s.level}: {format_pbw_vector(L, s.vector)}")
    return 0


def cmd_tables(args, out):
    fmt = "json" if args.json else "text"
    ids = [args.table] if args.table else [1, 2, 3, 4]
    chunks = [emit_table(i, fmt) for i in ids]
    out("".join(chunks).rstrip("\n"))
    return 0


def cmd_classify(args, out):
    t = _parse_simple_type(args.type)
    rs = build_root_system(t)
    k = _parse_rational(args.level)
    v = lisse_verdict(rs, k)
    out(f"{t} at k = {k}:")
    out(f"  lisse: {v.lisse} ({v.reason})")
    if (t.series, t.rank) == ("A", 1):
        out(f"  collapses to trivial: {v.collapses_to_trivial} (Virasoro special case)")
    else:
        out(f"  collapses to trivial: {collapse_verdict(rs, k)}")
    return 0


def cmd_check_all(args, out):
    if args.budget is not None:
        os.environ["MINVERT_BUDGET"] = str(args.budget)
    failures = run_all(report=out)
    out(f"{len(CRITERIA) - failures} passed, {failures} failed")
    return 1 if failures else 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="minvert",
        description="Exact computations around minimal nilpotent orbits, "
                    "affine vertex algebras, and minimal W-algebra levels.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("describe", help="grading, g^natural, and levels for a type")
    d.add_argument("type")
    d.set_defaults(func=cmd_describe)

    d = sub.add_parser("pairs", help="positive-root pairs summing to theta - theta_i")
    d.add_argument("type")
    d.add_argument("--summand", type=int, default=1)
    d.set_defaults(func=cmd_pairs)

    d = sub.add_parser("singular", help="singular level of sigma(w_i)^{n+1}")
    d.add_argument("type")
    d.add_argument("--summand", type=int, default=1)
    d.add_argument("--power", type=int, default=0)
    d.set_defaults(func=cmd_singular)

    d = sub.add_parser("solve", help="general singular-vector solver")
    d.add_argument("type")
    d.add_argument("--weight", required=True,
                   help="fundamental-weight coordinates, comma separated")
    d.add_argument("--degree", type=int, required=True)
    d.set_defaults(func=cmd_solve)

    d = sub.add_parser("tables", help="emit reference tables 1-4")
    d.add_argument("table", nargs="?", type=int, choices=(1, 2, 3, 4))
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_tables)

    d = sub.add_parser("classify", help="lisse / collapse verdicts at a level")
    d.add_argument("type")
    d.add_argument("--level", required=True, help="rational level p/q")
    d.set_defaults(func=cmd_classify)

    d = sub.add_parser("check-all", help="run the full acceptance suite")
    d.add_argument("--budget", type=int, default=None)
    d.set_defaults(func=cmd_check_all)
    return p


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args, print)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
