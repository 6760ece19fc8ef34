"""Command line front end.

One subcommand per capability: saf, vanishing, nonlift, ay, induce,
lift, compose, invert.  Results go to stdout (human-readable by
default, canonical JSON with --json); timing goes to stderr so that
stdout is byte-identical across reruns.  Exit codes: 0 = computed
(whatever the verdict), 2 = invalid input, 3 = iteration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from decimal import Decimal, getcontext
from fractions import Fraction

from . import __version__
from .arnoux_yoccoz import (
    AYSystem,
    ay_lift,
    ay_self_similarity_witness,
    ay_stretch_minpoly,
)
from .certificates import (
    OUTCOME_INCONCLUSIVE,
    gf2_completion_bruteforce,
    nonlift_certificate,
    vanishing_by_field_degree,
    vanishing_by_reciprocity,
)
from .errors import InputError, IterationCapError
from .field import AlgNum
from .iet import IET
from .ietfile import (
    dumps_iet,
    dumps_report,
    parse_coords,
    parse_interval,
    read_iet,
)
from .polys import Poly

FLOAT_DIGITS = 20


def algnum_decimal(value: AlgNum, digits: int = FLOAT_DIGITS) -> str:
    """Decimal rendering with the given significant digits (display only)."""
    approx = value.approx(Fraction(1, 10 ** (digits + 5)))
    getcontext().prec = digits
    return str(Decimal(approx.numerator) / Decimal(approx.denominator))


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _print_report(args, report: dict, human_lines) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(dumps_report(report))
    else:
        for line in human_lines:
            print(line)


def cmd_saf(args) -> int:
    iet = read_iet(args.iet)
    wedge = iet.saf()
    verdict = "VANISHES" if wedge.is_zero() else "NONZERO"
    matrix = [[str(c) for c in row] for row in wedge.rows]
    report = {
        "command": "saf",
        "inputs": {"iet": args.iet},
        "matrix": matrix,
        "verdict": verdict,
    }
    lines = [f"wedge matrix ({iet.field.degree} x {iet.field.degree}):"]
    for row in matrix:
        lines.append("  " + "  ".join(row))
    lines.append(f"verdict: {verdict}")
    if args.float:
        lines.append(
            "total length ~ " + algnum_decimal(iet.total)
        )
    _print_report(args, report, lines)
    return 0


def _parse_minpoly(text: str) -> Poly:
    poly = Poly.from_string(text)
    if not (poly.is_monic and poly.is_integral):
        raise InputError("minimal polynomial must be monic with integer coefficients")
    return poly


def cmd_vanishing(args) -> int:
    m = _parse_minpoly(args.minpoly)
    interval = parse_interval(args.interval) if args.interval else None
    by_rec = vanishing_by_reciprocity(m, interval)
    by_deg = vanishing_by_field_degree(m, interval)
    agree = by_rec.vanishes == by_deg.vanishes
    report = {
        "command": "vanishing",
        "inputs": {"minpoly": m.to_string(), "interval": args.interval},
        "reciprocity": by_rec.to_dict(),
        "field_degree": by_deg.to_dict(),
        "agree": agree,
    }
    lines = [
        f"minimal polynomial: {m}",
        f"reciprocity method:  vanishes={by_rec.vanishes} "
        f"(reversal: {by_rec.detail})",
        f"field-degree method: vanishes={by_deg.vanishes} "
        f"(trace-field index {by_deg.index}, min poly of lambda+1/lambda: "
        f"{by_deg.detail})",
        f"methods agree: {agree}",
    ]
    for note in by_rec.notes + by_deg.notes:
        lines.append(f"note: {note}")
    _print_report(args, report, lines)
    return 0


def cmd_nonlift(args) -> int:
    m = _parse_minpoly(args.minpoly)
    verdict = nonlift_certificate(m, args.genus)
    report = {
        "command": "nonlift",
        "inputs": {"minpoly": m.to_string(), "genus": args.genus},
        "verdict": verdict.to_dict(),
    }
    lines = [f"minimal polynomial: {m}", f"genus: {args.genus}"]
    if verdict.reason:
        lines.append(f"outcome: {verdict.outcome} ({verdict.reason})")
    else:
        lines.append(
            f"outcome: {verdict.outcome} "
            f"(variant={verdict.variant}, witness={verdict.to_dict()['witness']})"
        )
    if args.oracle:
        slow = nonlift_certificate(m, args.genus,
                                   completion=gf2_completion_bruteforce)
        agree = slow.outcome == verdict.outcome
        report["oracle"] = {"verdict": slow.to_dict(), "agree": agree}
        lines.append(f"brute-force oracle agrees: {agree}")
    for note in verdict.notes:
        lines.append(f"note: {note}")
    _print_report(args, report, lines)
    return 0


def cmd_ay(args) -> int:
    if args.genus < 3:
        raise InputError("construction requires genus >= 3")
    if not args.check:
        lift = ay_lift(args.genus)
        _emit(args, dumps_iet(lift))
        return 0
    system = AYSystem.build(args.genus)
    lift = system.lift
    checks = {}
    checks["involution"] = system.boundary_involution.compose(
        system.boundary_involution
    ) == IET.identity(system.field, system.boundary_involution.total)
    checks["saf_vanishes"] = lift.saf().is_zero()
    witness = ay_self_similarity_witness(args.genus,
                                         involution=system.boundary_involution)
    checks["self_similar"] = witness is not None
    by_rec = vanishing_by_reciprocity(system.stretch_minpoly)
    by_deg = vanishing_by_field_degree(system.stretch_minpoly)
    checks["vanishing_methods_agree"] = (
        by_rec.vanishes and by_deg.vanishes == by_rec.vanishes
    )
    checks["saf_matches_criterion"] = by_rec.vanishes == checks["saf_vanishes"]
    cert = nonlift_certificate(system.stretch_minpoly, args.genus)
    checks["certificate_inconclusive"] = cert.outcome == OUTCOME_INCONCLUSIVE
    report = {
        "command": "ay",
        "inputs": {"genus": args.genus},
        "alpha_interval": f"{system.field.interval[0]},{system.field.interval[1]}",
        "stretch_minpoly": system.stretch_minpoly.to_string(),
        "checks": checks,
        "self_similarity_offset": None if witness is None else
            ",".join(str(c) for c in witness.coords),
        "all_pass": all(checks.values()),
    }
    lines = [f"genus {args.genus}: alpha in ({system.field.interval[0]}, "
             f"{system.field.interval[1]})"]
    if args.float:
        lines[-1] += f", alpha ~ {algnum_decimal(system.alpha())}"
    for name, value in checks.items():
        lines.append(f"check {name}: {'pass' if value else 'FAIL'}")
    lines.append(f"all checks pass: {all(checks.values())}")
    _print_report(args, report, lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(dumps_iet(lift))
    return 0


def cmd_induce(args) -> int:
    iet = read_iet(args.iet)
    sub = parse_coords(args.sub, iet.field)
    _emit(args, dumps_iet(iet.first_return(sub)))
    return 0


def cmd_lift(args) -> int:
    iet = read_iet(args.iet)
    half = iet.total * Fraction(1, 2)
    _emit(args, dumps_iet(iet.rotate(half)))
    return 0


def cmd_compose(args) -> int:
    outer = read_iet(args.iet)
    inner = read_iet(args.iet2)
    _emit(args, dumps_iet(outer.compose(inner)))
    return 0


def cmd_invert(args) -> int:
    iet = read_iet(args.iet)
    _emit(args, dumps_iet(iet.inverse()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ietsaf",
        description="Exact SAF invariants, vanishing criteria, and "
                    "nonorientable-lift certificates for interval exchanges.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("saf", help="SAF invariant of an IET file")
    p.add_argument("iet", help="path to an IET file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--float", action="store_true")
    p.set_defaults(func=cmd_saf)

    p = sub.add_parser("vanishing", help="SAF vanishing from a minimal polynomial")
    p.add_argument("--minpoly", required=True,
                   help="constant-first integer coefficients, e.g. '-1,-1,-1,1'")
    p.add_argument("--interval", help="optional isolating interval 'lo,hi'")
    p.add_argument("--json", action="store_true")
    p.add_argument("--float", action="store_true")
    p.set_defaults(func=cmd_vanishing)

    p = sub.add_parser("nonlift", help="nonorientable-lift exclusion certificate")
    p.add_argument("--minpoly", required=True)
    p.add_argument("--genus", required=True, type=int)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check with the brute-force completion search")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nonlift)

    p = sub.add_parser("ay", help="Arnoux-Yoccoz construction and checks")
    p.add_argument("--genus", required=True, type=int)
    p.add_argument("--check", action="store_true",
                   help="run the verification suite instead of emitting the IET")
    p.add_argument("--out", help="write the lift IET file here")
    p.add_argument("--json", action="store_true")
    p.add_argument("--float", action="store_true")
    p.set_defaults(func=cmd_ay)

    p = sub.add_parser("induce", help="first-return map on [0, b)")
    p.add_argument("--iet", required=True)
    p.add_argument("--sub", required=True,
                   help="coordinates of b in the file's field")
    p.add_argument("--out")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("lift", help="compose with the half-circumference rotation")
    p.add_argument("--iet", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("compose", help="composition f(g(x)) of two IET files")
    p.add_argument("--iet", required=True, help="outer map f")
    p.add_argument("--iet2", required=True, help="inner map g")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("invert", help="inverse of an IET file")
    p.add_argument("--iet", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_invert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IterationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    finally:
        elapsed = time.perf_counter() - start
        print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
