"""Command-line interface: ``bezinv {invert,eval,diag,batch}``.

Exit codes: 0 ok, 1 input error (including degenerate input), 2 point not
on curve, 3 unresolved nullspace, 4 some batch line failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import BezinvError
from .formats import CurveFileError, dumps_report, load_curve
from .inversion import (
    STATUS_DEGENERATE,
    STATUS_OFF_CURVE,
    STATUS_OK,
    STATUS_UNRESOLVED,
    QueryPoint,
    diagnose,
    eval_curve,
    invert,
)
from .spectral import DEFAULT_RANK_TOL, RankPolicy

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_OFF_CURVE = 2
EXIT_UNRESOLVED = 3
EXIT_BATCH_FAILED = 4

EXIT_BY_STATUS = {
    STATUS_OK: EXIT_OK,
    STATUS_OFF_CURVE: EXIT_OFF_CURVE,
    STATUS_UNRESOLVED: EXIT_UNRESOLVED,
    STATUS_DEGENERATE: EXIT_INPUT,
}

RANK_TOL_ENV = "BEZINV_RANK_TOL"


class InputError(Exception):
    pass


def _default_tol() -> float:
    raw = os.environ.get(RANK_TOL_ENV)
    if raw is None:
        return DEFAULT_RANK_TOL
    try:
        return float(raw)
    except ValueError:
        raise InputError(f"{RANK_TOL_ENV}={raw!r} is not a number") from None


def _policy(args) -> RankPolicy:
    tol = args.tol_rank if args.tol_rank is not None else _default_tol()
    try:
        return RankPolicy(tol)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _point(text: str) -> QueryPoint:
    try:
        return QueryPoint.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _fmt_float(v) -> str:
    return "-" if v is None else format(v, ".17g")


def _human_report(rep) -> str:
    lines = [
        f"status:         {rep.status}",
        f"t0:             {_fmt_float(rep.t0)}",
        f"method:         {rep.method}",
        f"nullity:        {rep.nullity}",
        f"selected index: {'-' if rep.selected_index is None else rep.selected_index}",
        f"residual:       {_fmt_float(rep.residual)}",
        f"arithmetic:     {rep.arithmetic}",
        "singular values:",
    ]
    lines += [f"  {v:.16e}" for v in rep.singular_values]
    return "\n".join(lines)


def _add_common(sp, point=True):
    sp.add_argument("--curve", required=True, help="curve JSON file")
    if point:
        sp.add_argument("--point", required=True, help='query point "x,y"; decimals are read exactly')
        sp.add_argument("--tol-rank", type=float, default=None, help="relative singular value cutoff")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bezinv", description="Parameter inversion for rational Bezier curves."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("invert", help="find the parameter of a point on the curve")
    _add_common(sp)
    sp.add_argument("--method", choices=("auto", "bezout", "sylvester"), default="auto")
    sp.add_argument("--arith", choices=("rational", "float"), default="rational")
    sp.add_argument("--residual-threshold", type=float, default=None)
    sp.add_argument("--json", action="store_true", help="print the JSON report")

    sp = sub.add_parser("eval", help="evaluate the curve at a parameter")
    _add_common(sp, point=False)
    sp.add_argument("--t", required=True, help='parameter, e.g. "0.25" or "1/7"')
    sp.add_argument("--exact", action="store_true", help="print exact fractions")

    sp = sub.add_parser("diag", help="singular values and rank decision")
    _add_common(sp)
    sp.add_argument("--method", choices=("bezout", "sylvester"), default="bezout")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("batch", help="invert every point in a file")
    _add_common(sp, point=False)
    sp.add_argument("--points", required=True, help='file with one "x,y" per line')
    sp.add_argument("--tol-rank", type=float, default=None)
    sp.add_argument("--method", choices=("auto", "bezout", "sylvester"), default="auto")
    sp.add_argument("--arith", choices=("rational", "float"), default="rational")
    sp.add_argument("--residual-threshold", type=float, default=None)
    sp.add_argument("--json-lines", action="store_true")
    return parser


def cmd_invert(args, out) -> int:
    curve = load_curve(args.curve)
    rep = invert(
        curve,
        _point(args.point),
        policy=_policy(args),
        arith=args.arith,
        method=args.method,
        residual_threshold=args.residual_threshold,
    )
    print(dumps_report(rep) if args.json else _human_report(rep), file=out)
    if rep.status == STATUS_DEGENERATE:
        print("error: p or q vanishes identically; the point shares a constant coordinate with the curve", file=sys.stderr)
    return EXIT_BY_STATUS[rep.status]


def cmd_eval(args, out) -> int:
    curve = load_curve(args.curve)
    try:
        t = Fraction(args.t.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse t={args.t!r}") from None
    x, y = eval_curve(curve, t)
    if args.exact and isinstance(x, Fraction) and isinstance(y, Fraction):
        print(f"{x}, {y}", file=out)
    else:
        print(f"{float(x)!r}, {float(y)!r}", file=out)
    return EXIT_OK


def cmd_diag(args, out) -> int:
    curve = load_curve(args.curve)
    d = diagnose(curve, _point(args.point), policy=_policy(args), method=args.method)
    if args.json:
        print(json.dumps(d), file=out)
        return EXIT_OK
    print(f"matrix:   {d['method']} ({d['order']}x{d['order']})", file=out)
    print("singular values:", file=out)
    for k, v in enumerate(d["singular_values"], 1):
        tag = "  zero" if v <= d["cutoff"] else ""
        print(f"  sigma_{k} = {v:.16e}{tag}", file=out)
    print(f"cutoff:   {d['cutoff']:.6e}", file=out)
    print(f"rank:     {d['rank']}", file=out)
    print(f"nullity:  {d['nullity']}", file=out)
    print("trailing right singular vector:", file=out)
    for v in d["trailing_vector"]:
        print(f"  {v: .16e}", file=out)
    return EXIT_OK


def cmd_batch(args, out) -> int:
    curve = load_curve(args.curve)
    policy = _policy(args)
    try:
        with open(args.points, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {args.points}: {exc.strerror}") from None
    failed = False
    for k, line in enumerate(lines, 1):
        try:
            rep = invert(
                curve,
                QueryPoint.parse(line),
                policy=policy,
                arith=args.arith,
                method=args.method,
                residual_threshold=args.residual_threshold,
            )
        except (ValueError, BezinvError) as exc:
            failed = True
            rec = {"line": k, "status": "input_error", "error": str(exc)}
            print(json.dumps(rec) if args.json_lines else f"line {k}: input_error: {exc}", file=out)
            continue
        failed |= rep.status != STATUS_OK
        if args.json_lines:
            print(dumps_report(rep), file=out)
        else:
            print(f"line {k}: {rep.status} t0={_fmt_float(rep.t0)} residual={_fmt_float(rep.residual)}", file=out)
    return EXIT_BATCH_FAILED if failed else EXIT_OK


COMMANDS = {"invert": cmd_invert, "eval": cmd_eval, "diag": cmd_diag, "batch": cmd_batch}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (InputError, CurveFileError, BezinvError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
