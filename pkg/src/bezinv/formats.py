"""JSON curve files and report serialization.

Curve files come in two forms::

    {"type": "rational_bezier", "degree": n,
     "control_points": [[x, y], ...], "weights": [...]}

    {"type": "general_rational", "degree": n,
     "x_num": [...], "x_den": [...], "y_num": [...], "y_den": [...]}

Numbers may be JSON numbers or strings. Strings ("8.50665", "1/7") parse
to exact rationals. JSON integers are exact too; JSON floats are converted
to the rational equal to their binary value, so ``0.1`` is not ``1/10``.

Reports are flat JSON objects with the fields of ``REPORT_FIELDS``. Floats
are written with 17 significant digits; non-finite values become ``null``.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path

from .bernstein import BernsteinPoly
from .inversion import GeneralRationalCurve, InversionReport, RationalBezierCurve

REPORT_FIELDS = (
    "t0",
    "method",
    "nullity",
    "singular_values",
    "selected_index",
    "residual",
    "status",
    "arithmetic",
)


class CurveFileError(ValueError):
    pass


def _number(v, where: str) -> Fraction:
    if isinstance(v, bool):
        raise CurveFileError(f"{where}: booleans are not numbers")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        if not math.isfinite(v):
            raise CurveFileError(f"{where}: non-finite number")
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise CurveFileError(f"{where}: cannot parse {v!r} as a number") from None
    raise CurveFileError(f"{where}: expected a number or numeric string, got {type(v).__name__}")


def _numbers(doc: dict, key: str, n: int) -> list:
    arr = doc.get(key)
    if not isinstance(arr, list):
        raise CurveFileError(f"missing array {key!r}")
    if len(arr) != n + 1:
        raise CurveFileError(f"{key!r} has {len(arr)} entries, expected degree+1 = {n + 1}")
    return [_number(v, f"{key}[{i}]") for i, v in enumerate(arr)]


def curve_from_dict(doc: dict):
    if not isinstance(doc, dict):
        raise CurveFileError("curve file must hold a JSON object")
    kind = doc.get("type")
    n = doc.get("degree")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise CurveFileError("'degree' must be an integer >= 1")
    try:
        if kind == "rational_bezier":
            pts = doc.get("control_points")
            if not isinstance(pts, list) or len(pts) != n + 1:
                raise CurveFileError(f"'control_points' must list degree+1 = {n + 1} points")
            parsed = []
            for i, pt in enumerate(pts):
                if not isinstance(pt, list) or len(pt) != 2:
                    raise CurveFileError(f"control_points[{i}] must be [x, y]")
                parsed.append((_number(pt[0], f"control_points[{i}][0]"), _number(pt[1], f"control_points[{i}][1]")))
            return RationalBezierCurve(parsed, _numbers(doc, "weights", n))
        if kind == "general_rational":
            return GeneralRationalCurve(
                *(BernsteinPoly(_numbers(doc, k, n)) for k in ("x_num", "x_den", "y_num", "y_den"))
            )
    except CurveFileError:
        raise
    except ValueError as exc:
        raise CurveFileError(str(exc)) from None
    raise CurveFileError(f"unknown curve type {kind!r}; expected 'rational_bezier' or 'general_rational'")


def load_curve(path) -> object:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CurveFileError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CurveFileError(f"{path}: invalid JSON ({exc})") from None
    return curve_from_dict(doc)


def _fmt(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if not math.isfinite(v):
            return "null"
        return format(v, ".17g") if v != int(v) or abs(v) >= 1e16 else repr(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return json.dumps(v)


def dumps_report(report: InversionReport | dict) -> str:
    d = report.to_dict() if isinstance(report, InversionReport) else report
    return "{" + ", ".join(f"{json.dumps(k)}: {_fmt(d[k])}" for k in REPORT_FIELDS) + "}"


def report_from_dict(d: dict) -> InversionReport:
    return InversionReport(
        t0=d["t0"],
        method=d["method"],
        nullity=d["nullity"],
        singular_values=tuple(d["singular_values"]),
        selected_index=d["selected_index"],
        residual=d["residual"],
        status=d["status"],
        arithmetic=d["arithmetic"],
    )
