"""Command line front end: decomposition, classification, quantum, and Bethe reports.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Exact rationals
are serialized as strings like "-7/10" so reports round-trip losslessly.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

# lets argparse treat "-1/2,-3/4" as a value, not an option (no option string
# here starts with a digit, so this cannot shadow a real flag)
_NEGATIVE_RATIONAL_LIST = re.compile(r"^-\d[\d/,.\-]*$")

from . import __version__
from .sigchar import DomainError, GenericityError, peel_decompose
from .classify import ExplicitType, classify_definite, default_level_bound, verify_type
from .quantum import QParam, RootOfUnityError, crystal_multiplicity, multiplicity_signature
from .bethe import FalsificationError, MasterConfig, bound_check, find_critical_points


class UsageError(ValueError):
    pass


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed rational {text!r}: {exc}") from None


def _parse_rational_list(text: str) -> list[Fraction]:
    items = [s for s in text.split(",") if s.strip()]
    if not items:
        raise UsageError("empty list")
    return [_parse_rational(s) for s in items]


def _parse_int_list(text: str) -> list[int]:
    out = []
    for s in text.split(","):
        s = s.strip()
        if not s:
            continue
        try:
            out.append(int(s))
        except ValueError:
            raise UsageError(f"malformed integer {s!r}") from None
    if not out:
        raise UsageError("empty list")
    return out


def _rat_str(x: Fraction) -> str:
    return str(Fraction(x))


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("VERMASIG_THREADS", "1")))
    except ValueError:
        return 1


def _print(args, text: str) -> None:
    print(text)
    if getattr(args, "out", None):
        with open(args.out, "a", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _emit(report: dict, rows: list[dict], columns: list[str], args) -> None:
    if args.json:
        report = dict(report)
        report["rows"] = rows
        _print(args, json.dumps(report, sort_keys=True))
        return
    # config and version ride along as a comment line in the text formats
    header = f"# vermasig {report['version']} {json.dumps(report['config'], sort_keys=True)}"
    if args.csv:
        _print(args, header)
        _print(args, ",".join(columns))
        for row in rows:
            _print(args, ",".join(str(row[c]) for c in columns))
    else:
        _print(args, header)
        widths = {
            c: max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c)
            for c in columns
        }
        _print(args, "  ".join(c.ljust(widths[c]) for c in columns))
        for row in rows:
            _print(args, "  ".join(str(row[c]).ljust(widths[c]) for c in columns))


def _add_format_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--csv", action="store_true", help="emit CSV rows")
    parser.add_argument("--out", help="also append the report to this file")


def _cmd_decompose(args) -> int:
    weights = _parse_rational_list(args.weights)
    dec = peel_decompose(weights, args.max_level)
    rows = []
    for e in dec.entries:
        rows.append(
            {
                "m": e.level,
                "pos": e.pos,
                "neg": e.neg,
                "sgn": e.signature,
                "dim": e.dim,
                "definite": e.is_definite,
            }
        )
    report = {
        "command": "decompose",
        "version": __version__,
        "config": {"weights": [_rat_str(w) for w in weights], "max_level": args.max_level},
    }
    _emit(report, rows, ["m", "pos", "neg", "sgn", "dim", "definite"], args)
    return 0


def _cmd_classify(args) -> int:
    if (args.type is None) == (args.weights is None):
        raise UsageError("give exactly one of --type or --weights")
    if args.type is not None:
        values = _parse_int_list(args.type)
        if len(values) < 3:
            raise UsageError("--type needs a total floor plus at least two factor floors")
        etype = ExplicitType(values[0], tuple(values[1:]))
    else:
        from .classify import explicit_type_of

        etype = explicit_type_of(_parse_rational_list(args.weights))
    bound = args.bound if args.bound is not None else default_level_bound(etype)
    report_obj = classify_definite(etype, bound)
    rows = [{"level": lv, "sign": s} for lv, s in report_obj.entries]
    report = {
        "command": "classify",
        "version": __version__,
        "config": {
            "total_floor": etype.total_floor,
            "factor_floors": list(etype.factor_floors),
            "bound": bound,
            "seed": args.seed,
        },
        "complete_up_to": report_obj.complete_up_to,
    }
    verified = None
    if args.verify:
        verified = verify_type(etype, bound, random.Random(args.seed))
        report["verified"] = verified
    _emit(report, rows, ["level", "sign"], args)
    if not (args.json or args.csv) and verified is not None:
        print(f"verified: {verified}")
    return 0 if verified in (None, True) else 1


def _cmd_quantum(args) -> int:
    if args.q1:
        if args.weights is None or args.max_level is None:
            raise UsageError("--q1 needs --weights and --max-level")
        weights = _parse_rational_list(args.weights)
        rows = []
        for m in range(args.max_level + 1):
            rows.append(
                {
                    "m": m,
                    "sgn": multiplicity_signature(weights, m, None),
                    "dim": math.comb(m + len(weights) - 2, len(weights) - 2),
                }
            )
        report = {
            "command": "quantum",
            "version": __version__,
            "config": {
                "mode": "q1",
                "weights": [_rat_str(w) for w in weights],
                "max_level": args.max_level,
            },
        }
        _emit(report, rows, ["m", "sgn", "dim"], args)
        return 0

    if args.a is None or args.t is None:
        raise UsageError("generic-q mode needs --a and --t")
    for piece in args.a.split(","):
        piece = piece.strip()
        if piece and not piece.lstrip("+").isdigit():
            raise UsageError(f"--a expects nonnegative integers, got {piece!r}")
    a = _parse_int_list(args.a)
    t = _parse_rational(args.t)
    try:
        qp = QParam(t.numerator, t.denominator)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    if args.all_levels:
        levels = list(range(sum(a) // 2 + 1))
    elif args.m is not None:
        levels = [args.m]
    else:
        raise UsageError("give -m or --all-levels")
    rows = []
    for m in levels:
        rows.append(
            {
                "a": "+".join(str(x) for x in a),
                "m": m,
                "t": _rat_str(t),
                "sgn": multiplicity_signature(a, m, qp),
                "dim": crystal_multiplicity(a, m),
            }
        )
    report = {
        "command": "quantum",
        "version": __version__,
        "config": {"mode": "generic", "a": a, "t": _rat_str(t), "levels": levels},
    }
    _emit(report, rows, ["a", "m", "t", "sgn", "dim"], args)
    return 0


def _parse_sweep(expr: str) -> list[int]:
    try:
        key, rng = expr.split("=")
        if key.strip() != "m":
            raise ValueError("only m ranges are supported")
        lo, hi = rng.split("..")
        lo, hi = int(lo), int(hi)
        if lo < 1 or hi < lo:
            raise ValueError("empty range")
        return list(range(lo, hi + 1))
    except ValueError as exc:
        raise UsageError(f"bad --sweep {expr!r}: {exc}") from None


def _bethe_level_row(weights, z, m, seed, budget):
    """One sweep instance; module-level so process pools can run it."""
    cfg = MasterConfig(tuple(z), tuple(weights), m)
    report_m = bound_check(cfg, seed=seed)
    points = find_critical_points(cfg, attempts=budget, seed=seed)
    return {
        "m": m,
        "dim": report_m.dim,
        "sgn": report_m.signature,
        "abs_sgn": abs(report_m.signature),
        "n_real": report_m.n_real,
        "n_roots_found": len(points),
        "n_roots_real": sum(1 for p in points if p.is_real),
        "seed": seed,
        "points": [
            {
                "q_coefficients": [[c.real, c.imag] for c in p.qpoly],
                "residual": p.residual,
                "is_real": p.is_real,
            }
            for p in points
        ],
    }


def _cmd_bethe(args) -> int:
    weights = _parse_rational_list(args.weights)
    z = _parse_rational_list(args.z)
    levels = _parse_sweep(args.sweep) if args.sweep else [args.m]
    if levels == [None]:
        raise UsageError("give -m or --sweep")
    for m in levels:
        MasterConfig(tuple(z), tuple(weights), m).require_generic()
    jobs = [(weights, z, m, args.seed + idx, args.budget) for idx, m in enumerate(levels)]
    threads = args.threads if args.threads else _default_threads()
    rows = []
    failures = 0
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = pool.map(_bethe_level_job, jobs)
    else:
        results = map(_bethe_level_job, jobs)
    for outcome in results:
        if isinstance(outcome, str):
            print(f"verification failure: {outcome}", file=sys.stderr)
            failures += 1
        else:
            rows.append(outcome)
    report = {
        "command": "bethe",
        "version": __version__,
        "config": {
            "weights": [_rat_str(w) for w in weights],
            "z": [_rat_str(v) for v in z],
            "levels": levels,
            "seed": args.seed,
            "budget": args.budget,
        },
    }
    if args.json:
        report["rows"] = rows
        _print(args, json.dumps(report, sort_keys=True))
    else:
        cols = ["m", "dim", "abs_sgn", "n_real", "n_roots_found", "n_roots_real"]
        slim = [{c: r[c] for c in cols} for r in rows]
        _emit(report, slim, cols, args)
    return 1 if failures else 0


def _bethe_level_job(job):
    try:
        return _bethe_level_row(*job)
    except FalsificationError as exc:
        return str(exc)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vermasig",
        description="multiplicity space signatures, definite-space classification, "
        "quantum signature formulas, and Bethe real critical point counts",
    )
    parser._negative_number_matcher = _NEGATIVE_RATIONAL_LIST
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="peel a tensor product character")
    p.add_argument("--weights", required=True, help="comma-separated rationals")
    p.add_argument("--max-level", type=int, required=True)
    _add_format_flags(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("classify", help="definite multiplicity spaces of an explicit type")
    p.add_argument("--type", help="total floor,factor floors (e.g. 1,0,0,-1)")
    p.add_argument("--weights", help="derive the explicit type from weights")
    p.add_argument("--bound", type=int)
    p.add_argument("--verify", action="store_true", help="cross-check against peeling")
    p.add_argument("--seed", type=int, default=0)
    _add_format_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("quantum", help="multiplicity signatures at unit-circle q or q=1")
    p.add_argument("--a", help="nonnegative integer weights, comma separated")
    p.add_argument("--t", help="q = exp(i*pi*t) for rational t = p/D in (0,1)")
    p.add_argument("-m", type=int)
    p.add_argument("--all-levels", action="store_true")
    p.add_argument("--q1", action="store_true", help="evaluate the formula at q = 1")
    p.add_argument("--weights", help="rational weights for --q1 mode")
    p.add_argument("--max-level", type=int)
    _add_format_flags(p)
    p.set_defaults(func=_cmd_quantum)

    p = sub.add_parser("bethe", help="real critical point counts and the signature bound")
    p.add_argument("--weights", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("-m", type=int)
    p.add_argument("--sweep", help="level range, e.g. m=1..3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None, help="Newton attempt budget")
    p.add_argument(
        "--threads",
        type=int,
        default=None,
        help="sweep workers (default: VERMASIG_THREADS or 1)",
    )
    _add_format_flags(p)
    p.set_defaults(func=_cmd_bethe)

    for sp in sub.choices.values():
        sp._negative_number_matcher = _NEGATIVE_RATIONAL_LIST
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, DomainError, GenericityError, RootOfUnityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
