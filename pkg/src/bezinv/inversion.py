"""Point inversion for rational curves in Bernstein form.

Given a curve ``P(t)`` and a point ``P0`` (approximately) on it, the two
polynomials

    p(t) = x_num(t) - x0 * x_den(t),    q(t) = y_num(t) - y0 * y_den(t)

share the root ``t0``. Their Bernstein-Bezout matrix then has the Bernstein
vector of ``t0`` in its nullspace, so ``t0`` can be read off the ratio of
two consecutive components of a nullvector obtained from the SVD. When a
power-degree drop inflates the nullspace, the Bernstein-Sylvester matrix of
the degree-reduced pair is used instead.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import bernstein as bp
from .bernstein import BernsteinPoly, as_poly, degree_reduce, power_degree, to_scalar
from .errors import DegenerateVector, DenominatorZero, ZeroPolynomial
from .resultant import ResultantMatrix, bernstein_bezout, bernstein_sylvester
from .spectral import RankPolicy, numerical_nullspace, svd

__all__ = [
    "RationalBezierCurve",
    "GeneralRationalCurve",
    "QueryPoint",
    "InversionReport",
    "eval_curve",
    "build_pq",
    "recover_parameter",
    "invert",
    "diagnose",
    "STATUS_OK",
    "STATUS_UNRESOLVED",
    "STATUS_OFF_CURVE",
    "STATUS_DEGENERATE",
]

STATUS_OK = "ok"
STATUS_UNRESOLVED = "nullspace_dim_gt_1_unresolved"
STATUS_OFF_CURVE = "point_not_on_curve"
STATUS_DEGENERATE = "degenerate_input"

ARITH_KINDS = ("rational", "float")
METHODS = ("auto", "bezout", "sylvester")


@dataclass(frozen=True)
class RationalBezierCurve:
    """Planar rational Bezier curve with control points ``(a_i, b_i)`` and weights ``w_i``."""

    control_points: tuple
    weights: tuple

    def __init__(self, control_points: Sequence, weights: Sequence):
        pts = tuple((bp._promote(a), bp._promote(b)) for a, b in control_points)
        w = tuple(bp._promote(v) for v in weights)
        if len(pts) != len(w):
            raise ValueError(f"{len(pts)} control points but {len(w)} weights")
        if len(pts) < 2:
            raise ValueError("a curve needs at least two control points")
        if any(v == 0 for v in w):
            raise ValueError("weights must be nonzero")
        object.__setattr__(self, "control_points", pts)
        object.__setattr__(self, "weights", w)

    @property
    def degree(self) -> int:
        return len(self.weights) - 1

    def polys(self):
        """Return ``(x_num, x_den, y_num, y_den)`` in the basis of the curve's degree."""
        den = BernsteinPoly(self.weights)
        xn = BernsteinPoly(w * a for w, (a, _) in zip(self.weights, self.control_points))
        yn = BernsteinPoly(w * b for w, (_, b) in zip(self.weights, self.control_points))
        return xn, den, yn, den

    def convert(self, exact: bool) -> "RationalBezierCurve":
        conv = lambda v: to_scalar(v, exact)  # noqa: E731
        return RationalBezierCurve(
            [(conv(a), conv(b)) for a, b in self.control_points],
            [conv(v) for v in self.weights],
        )


@dataclass(frozen=True)
class GeneralRationalCurve:
    """``x(t) = x_num / x_den``, ``y(t) = y_num / y_den`` with all four in one basis."""

    x_num: BernsteinPoly
    x_den: BernsteinPoly
    y_num: BernsteinPoly
    y_den: BernsteinPoly

    def __post_init__(self):
        for name in ("x_num", "x_den", "y_num", "y_den"):
            object.__setattr__(self, name, as_poly(getattr(self, name)))
        degs = {p.degree for p in self.polys()}
        if len(degs) != 1:
            raise ValueError(f"all four polynomials must share one degree, got {sorted(degs)}")
        if self.degree < 1:
            raise ValueError("curve degree must be at least 1")
        if self.x_den.is_zero() or self.y_den.is_zero():
            raise ValueError("denominators must not vanish identically")

    @property
    def degree(self) -> int:
        return self.x_num.degree

    def polys(self):
        return self.x_num, self.x_den, self.y_num, self.y_den

    def convert(self, exact: bool) -> "GeneralRationalCurve":
        return GeneralRationalCurve(*(as_poly(p, exact) for p in self.polys()))


@dataclass(frozen=True)
class QueryPoint:
    x: object
    y: object

    def __post_init__(self):
        object.__setattr__(self, "x", bp._promote(self.x))
        object.__setattr__(self, "y", bp._promote(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("query point must be finite")

    @classmethod
    def parse(cls, text: str) -> "QueryPoint":
        """Parse ``"x,y"``; decimal and fraction spellings are kept exact."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'x,y', got {text!r}")
        try:
            return cls(Fraction(parts[0].strip()), Fraction(parts[1].strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse point {text!r}: {exc}") from None

    def convert(self, exact: bool) -> "QueryPoint":
        return QueryPoint(to_scalar(self.x, exact), to_scalar(self.y, exact))

    def as_floats(self) -> tuple[float, float]:
        return float(self.x), float(self.y)


@dataclass(frozen=True)
class InversionReport:
    t0: Optional[float]
    method: str
    nullity: int
    singular_values: tuple
    selected_index: Optional[int]
    residual: Optional[float]
    status: str
    arithmetic: str

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK

    def to_dict(self) -> dict:
        d = asdict(self)
        d["singular_values"] = list(self.singular_values)
        return d


def eval_curve(curve, t):
    """Return ``(x(t), y(t))``; exact when the curve and ``t`` are exact."""
    xn, xd, yn, yd = curve.polys()
    t = bp._promote(t)
    dx = bp.eval(xd, t)
    dy = dx if yd is xd else bp.eval(yd, t)
    if dx == 0 or dy == 0:
        raise DenominatorZero(f"curve denominator vanishes at t={t}")
    return bp.eval(xn, t) / dx, bp.eval(yn, t) / dy


def build_pq(curve, point: QueryPoint):
    """The pair ``(x_num - x0 x_den, y_num - y0 y_den)`` whose common root is ``t0``."""
    xn, xd, yn, yd = curve.polys()
    return xn - xd.scale(point.x), yn - yd.scale(point.y)


def _select_index(z: np.ndarray) -> int:
    m = len(z)
    a = np.abs(z)
    k = int(np.argmax(a))
    if k == 0:
        return 1
    if k == m - 1:
        return m - 1
    # ties go to the left pair
    return k if a[k - 1] >= a[k + 1] else k + 1


def recover_parameter(z, index: Optional[int] = None) -> tuple[float, int]:
    """Recover ``t0`` from a (scaled) Bernstein vector ``z`` of length m.

    Uses ``t0 = i z_i / (i z_i + (m - i) z_{i-1})`` where, unless ``index``
    is given, ``z_i`` is the largest-magnitude component paired with its
    larger neighbour. Returns ``(t0, i)``.
    """
    z = np.asarray(z, dtype=float).ravel()
    m = len(z)
    if m < 2:
        raise ValueError("need a vector with at least two components")
    if not np.any(z):
        raise DegenerateVector("nullvector is identically zero")
    i = _select_index(z) if index is None else int(index)
    if not 1 <= i <= m - 1:
        raise ValueError(f"index must lie in 1..{m - 1}")
    num = i * z[i]
    den = num + (m - i) * z[i - 1]
    if den == 0:
        raise DegenerateVector(f"components {i - 1} and {i} give no finite parameter")
    return float(num / den), i


@dataclass
class _Attempt:
    method: str
    matrix: ResultantMatrix
    singular_values: np.ndarray
    nullity: int
    vector: Optional[np.ndarray] = field(default=None)


def _attempt(method: str, M: ResultantMatrix, policy: RankPolicy) -> _Attempt:
    s = svd(M.to_float(), compute_left=False)
    nullity, basis = numerical_nullspace(s, policy)
    if nullity == 1:
        z = basis[:, 0]
    elif nullity == 0:
        # best effort: the direction closest to a nullvector
        z = s.right_vectors[:, -1]
    else:
        z = None
    return _Attempt(method, M, s.singular_values, nullity, z)


def _default_threshold(point: QueryPoint) -> float:
    return 1e-3 * (1.0 + math.hypot(*point.as_floats()))


def residual(curve, point: QueryPoint, t0: float) -> float:
    try:
        x, y = eval_curve(curve, t0)
    except DenominatorZero:
        return math.inf
    px, py = point.as_floats()
    return math.hypot(float(x) - px, float(y) - py)


def invert(
    curve,
    point,
    *,
    policy: Optional[RankPolicy] = None,
    arith: str = "rational",
    method: str = "auto",
    residual_threshold: Optional[float] = None,
) -> InversionReport:
    """Find the parameter of ``point`` on ``curve``.

    ``arith="rational"`` builds p, q and the resultant matrix exactly and
    rounds only for the SVD; ``arith="float"`` does everything in double
    precision. ``method="auto"`` tries the Bezout matrix and falls back to the
    Sylvester matrix of the degree-reduced pair when the Bezout nullity
    exceeds one. A result with nullity 0 still yields the trailing right
    singular vector's parameter and is accepted only if its residual passes.
    """
    if arith not in ARITH_KINDS:
        raise ValueError(f"arith must be one of {ARITH_KINDS}")
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    policy = policy or RankPolicy()
    exact = arith == "rational"
    if not isinstance(point, QueryPoint):
        point = QueryPoint(*point)
    point = point.convert(exact)
    curve = curve.convert(exact)
    threshold = _default_threshold(point) if residual_threshold is None else residual_threshold

    fallback_name = "sylvester" if method == "sylvester" else "bezout"

    def report(status, attempt=None, t0=None, index=None, res=None, used=None):
        return InversionReport(
            t0=t0,
            method=used or (attempt.method if attempt else fallback_name),
            nullity=attempt.nullity if attempt else 0,
            singular_values=tuple(float(v) for v in attempt.singular_values) if attempt else (),
            selected_index=index,
            residual=res,
            status=status,
            arithmetic=arith,
        )

    p, q = build_pq(curve, point)
    if p.is_zero() or q.is_zero():
        return report(STATUS_DEGENERATE)

    attempt = None
    if method in ("auto", "bezout"):
        attempt = _attempt("bezout", bernstein_bezout(p, q), policy)
        if method == "bezout" or attempt.nullity <= 1:
            return _finish(attempt, curve, point, threshold, report)

    try:
        dp, dq = power_degree(p), power_degree(q)
    except ZeroPolynomial:
        return report(STATUS_DEGENERATE, attempt)
    if dp == 0 or dq == 0:
        # a nonzero constant has no root at all
        return report(STATUS_OFF_CURVE, attempt, used="sylvester")
    S = bernstein_sylvester(degree_reduce(p, dp), degree_reduce(q, dq))
    return _finish(_attempt("sylvester", S, policy), curve, point, threshold, report)


def _finish(attempt: _Attempt, curve, point, threshold, report) -> InversionReport:
    if attempt.vector is None:
        return report(STATUS_UNRESOLVED, attempt)
    try:
        t0, i = recover_parameter(attempt.vector)
    except DegenerateVector:
        return report(STATUS_OFF_CURVE, attempt)
    res = residual(curve, point, t0)
    status = STATUS_OK if res <= threshold else STATUS_OFF_CURVE
    return report(status, attempt, t0=t0, index=i, res=res)


def diagnose(curve, point, *, policy: Optional[RankPolicy] = None, method: str = "bezout", arith: str = "rational") -> dict:
    """Singular values, rank decision and trailing right singular vector of one resultant matrix."""
    policy = policy or RankPolicy()
    exact = arith == "rational"
    if not isinstance(point, QueryPoint):
        point = QueryPoint(*point)
    p, q = build_pq(curve.convert(exact), point.convert(exact))
    if method == "sylvester":
        p = degree_reduce(p, power_degree(p))
        q = degree_reduce(q, power_degree(q))
        M = bernstein_sylvester(p, q)
    else:
        M = bernstein_bezout(p, q)
    s = svd(M.to_float())
    nullity, _ = numerical_nullspace(s, policy)
    sv = s.singular_values
    return {
        "method": method,
        "order": M.order,
        "singular_values": [float(v) for v in sv],
        "cutoff": policy.cutoff(float(sv[0])) if sv.size else 0.0,
        "rank": M.order - nullity,
        "nullity": nullity,
        "trailing_vector": [float(v) for v in s.right_vectors[:, -1]],
    }
