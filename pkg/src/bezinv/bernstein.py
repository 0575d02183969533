"""Polynomials in the Bernstein basis.

A polynomial of nominal degree ``n`` is stored by its coordinates
``c_0..c_n`` with respect to

    beta_i^(n)(t) = C(n, i) (1 - t)^(n - i) t^i,   i = 0..n.

Every routine is generic over the scalar type: :class:`fractions.Fraction`
gives error-free arithmetic, ``float`` gives ordinary double precision.
Integers are promoted to ``Fraction`` on construction so that divisions
stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

from .errors import NotRepresentable, ZeroPolynomial

__all__ = [
    "BernsteinPoly",
    "to_scalar",
    "is_exact",
    "binomial",
    "eval",
    "bernstein_vector",
    "multiply",
    "elevate",
    "power_coefficients",
    "power_degree",
    "degree_reduce",
    "change_of_basis_matrix",
    "as_poly",
]

# relative cutoff for "zero" power coefficients on the float path
FLOAT_ZERO_RTOL = 1e-12


def to_scalar(value, exact: bool = True):
    """Coerce ``value`` to a Fraction (``exact=True``) or a float.

    Strings are parsed as exact decimals or fractions ("8.50665", "1/7").
    A float passed with ``exact=True`` becomes the rational equal to its
    binary value, not to its decimal spelling.
    """
    if isinstance(value, str):
        value = Fraction(value.strip())
    elif isinstance(value, Decimal):
        value = Fraction(value)
    elif isinstance(value, (bool, np.bool_)):
        raise TypeError("booleans are not scalars")
    if exact:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, np.integer, Rational)):
            return Fraction(int(value)) if isinstance(value, (int, np.integer)) else Fraction(value)
        return Fraction(float(value))
    return float(value)


def is_exact(value) -> bool:
    return isinstance(value, Fraction)


def _promote(value):
    # ints would turn into floats under true division
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, np.floating):
        return float(value)
    return value


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    return comb(n, k)


@dataclass(frozen=True)
class BernsteinPoly:
    """Coordinates ``coeffs`` of a polynomial in the basis of degree ``len(coeffs) - 1``."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable):
        c = tuple(_promote(v) for v in coeffs)
        if not c:
            raise ValueError("a Bernstein polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, t):
        return eval(self, t)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def as_float(self) -> "BernsteinPoly":
        return BernsteinPoly(float(c) for c in self.coeffs)

    def as_exact(self) -> "BernsteinPoly":
        return BernsteinPoly(to_scalar(c) for c in self.coeffs)

    def _check_same_degree(self, other: "BernsteinPoly"):
        if other.degree != self.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}; elevate first"
            )

    def __add__(self, other: "BernsteinPoly") -> "BernsteinPoly":
        self._check_same_degree(other)
        return BernsteinPoly(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "BernsteinPoly") -> "BernsteinPoly":
        self._check_same_degree(other)
        return BernsteinPoly(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "BernsteinPoly":
        return BernsteinPoly(-a for a in self.coeffs)

    def scale(self, alpha) -> "BernsteinPoly":
        alpha = _promote(alpha)
        return BernsteinPoly(alpha * a for a in self.coeffs)


def eval(p: BernsteinPoly, t):
    """Evaluate ``p`` at ``t`` by de Casteljau's algorithm."""
    t = _promote(t)
    b = list(p.coeffs)
    s = 1 - t
    for r in range(1, len(b)):
        for i in range(len(b) - r):
            b[i] = s * b[i] + t * b[i + 1]
    return b[0]


def bernstein_vector(n: int, t) -> list:
    """Return ``(beta_0^(n)(t), ..., beta_n^(n)(t))``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t = _promote(t)
    s = 1 - t
    one = t * 0 + 1
    v = [one]
    # building up degree by degree keeps every entry a convex combination
    for _ in range(n):
        nxt = [s * v[0]]
        for i in range(1, len(v)):
            nxt.append(t * v[i - 1] + s * v[i])
        nxt.append(t * v[-1])
        v = nxt
    return v


def multiply(p: BernsteinPoly, q: BernsteinPoly) -> BernsteinPoly:
    """Product of ``p`` (degree a) and ``q`` (degree b) in the basis of degree a+b."""
    a, b = p.degree, q.degree
    out = [0] * (a + b + 1)
    for i, pi in enumerate(p.coeffs):
        if pi == 0:
            continue
        for j, qj in enumerate(q.coeffs):
            w = Fraction(binomial(a, i) * binomial(b, j), binomial(a + b, i + j))
            if isinstance(pi, float) or isinstance(qj, float):
                w = float(w)
            out[i + j] = out[i + j] + w * pi * qj
    zero = p.coeffs[0] * 0 + q.coeffs[0] * 0
    return BernsteinPoly(c if not (isinstance(c, int) and c == 0) else zero for c in out)


def elevate(p: BernsteinPoly, r: int = 1) -> BernsteinPoly:
    """Re-express ``p`` in the basis of degree ``p.degree + r``."""
    if r < 0:
        raise ValueError("elevation must be nonnegative")
    if r == 0:
        return p
    one = Fraction(1) if p.is_exact else 1.0
    return multiply(p, BernsteinPoly([one] * (r + 1)))


def power_coefficients(p: BernsteinPoly) -> list:
    """Monomial coefficients ``a_0..a_n`` with ``p(t) = sum a_k t^k``.

    a_k = C(n, k) * sum_{i<=k} (-1)^(k-i) C(k, i) c_i
    """
    n = p.degree
    out = []
    for k in range(n + 1):
        acc = 0
        for i in range(k + 1):
            term = binomial(k, i) * p.coeffs[i]
            acc = acc + term if (k - i) % 2 == 0 else acc - term
        out.append(binomial(n, k) * acc)
    return out


def power_degree(p: BernsteinPoly) -> int:
    """Exact degree of ``p`` in the power basis.

    Exact coefficients are tested against zero with no tolerance. Float
    coefficients count as zero when their power-basis magnitude is at most
    ``1e-12`` times the largest Bernstein coefficient magnitude.
    """
    scale = max(abs(c) for c in p.coeffs)
    if scale == 0:
        raise ZeroPolynomial("power degree of the zero polynomial is undefined")
    a = power_coefficients(p)
    if p.is_exact:
        tol = 0
    else:
        tol = FLOAT_ZERO_RTOL * float(scale)
    for k in range(p.degree, -1, -1):
        if abs(a[k]) > tol:
            return k
    raise ZeroPolynomial("all power coefficients vanish within tolerance")


def degree_reduce(p: BernsteinPoly, d: int) -> BernsteinPoly:
    """Express ``p`` in the basis of degree ``d``.

    Inverts degree elevation one step at a time, which stays in Bernstein
    form. Requires ``power_degree(p) <= d <= p.degree``.
    """
    if d > p.degree:
        return elevate(p, d - p.degree)
    if d < 0:
        raise ValueError("target degree must be nonnegative")
    if p.is_zero():
        return BernsteinPoly(p.coeffs[: d + 1])
    if power_degree(p) > d:
        raise NotRepresentable(
            f"polynomial has power degree {power_degree(p)} > {d}"
        )
    c = list(p.coeffs)
    while len(c) - 1 > d:
        n = len(c) - 1
        # elevation: c_i = (i/n) b_{i-1} + (1 - i/n) b_i; solve from both ends
        # and splice in the middle to damp float error growth
        left = [c[0]]
        for i in range(1, n):
            left.append((c[i] * n - i * left[i - 1]) / (n - i))
        right = [None] * n
        right[n - 1] = c[n]
        for i in range(n - 1, 0, -1):
            right[i - 1] = (c[i] * n - (n - i) * right[i]) / i
        half = n // 2
        c = left[:half] + right[half:]
    return BernsteinPoly(c)


def change_of_basis_matrix(n: int) -> np.ndarray:
    """Matrix ``N`` of order ``n`` from the Bernstein basis of degree n-1 to monomials.

    Rows are indexed by the monomials ``1, t, ..., t^(n-1)`` and columns by
    ``beta_0^(n-1), ..., beta_(n-1)^(n-1)``; entry ``N[i, j]`` is the
    coefficient of ``t^i`` in ``beta_j^(n-1)``. With this orientation
    ``N.T @ (1, t, ..., t^(n-1)) = bernstein_vector(n - 1, t)`` and the power
    Bezout matrix equals ``N @ B @ N.T``. ``N`` is lower triangular with
    diagonal ``C(n-1, i)``. Entries are exact Fractions in an object array.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    m = n - 1
    N = np.full((n, n), Fraction(0), dtype=object)
    for j in range(n):
        for i in range(j, n):
            sign = -1 if (i - j) % 2 else 1
            N[i, j] = Fraction(sign * binomial(m, j) * binomial(m - j, i - j))
    return N


def as_poly(coeffs: Sequence | BernsteinPoly, exact: bool | None = None) -> BernsteinPoly:
    """Build a polynomial, optionally forcing every coefficient exact or float."""
    if not isinstance(coeffs, BernsteinPoly):
        coeffs = BernsteinPoly(coeffs)
    if exact is None:
        return coeffs
    return coeffs.as_exact() if exact else coeffs.as_float()
