"""Resultant matrices for pairs of Bernstein-form polynomials.

Indexing is 0-based throughout. The fast Bezout recurrence is written
with 1-based loop counters ``i``, ``j`` so it reads like the classical
listing; ``B[i - 1, j]`` below is entry ``(i, j + 1)`` in 1-based terms,
while the coefficient arrays ``p[k]``, ``q[k]`` use ``k = 0..n`` as usual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .bernstein import BernsteinPoly, binomial, change_of_basis_matrix, multiply, power_coefficients
from .errors import DegreeMismatch, NotExact

__all__ = [
    "ResultantMatrix",
    "bernstein_bezout",
    "bezout_power_oracle",
    "bernstein_sylvester",
    "det_is_zero",
    "exact_det",
]

BEZOUT = "bernstein_bezout"
SYLVESTER = "bernstein_sylvester"
POWER_ORACLE = "power_bezout_oracle"


@dataclass(frozen=True)
class ResultantMatrix:
    kind: str
    entries: np.ndarray
    source_degrees: tuple[int, int]

    def __post_init__(self):
        self.entries.setflags(write=False)

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    @property
    def is_exact(self) -> bool:
        return self.entries.dtype == object and all(
            isinstance(v, Fraction) for v in self.entries.flat
        )

    def to_float(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.entries], dtype=float)


def _zero_like(*polys):
    for p in polys:
        for c in p.coeffs:
            return c * 0
    return Fraction(0)


def _empty(n, zero) -> np.ndarray:
    B = np.empty((n, n), dtype=object)
    B.fill(zero)
    return B


def bernstein_bezout(p: BernsteinPoly, q: BernsteinPoly) -> ResultantMatrix:
    """Bernstein-Bezout matrix of two polynomials of the same nominal degree n.

    ``B`` is the n x n matrix with

        (p(t) q(s) - p(s) q(t)) / (t - s) = b(s)^T B b(t),

    where ``b`` is the Bernstein vector of degree n-1. Built with the
    O(n^2) Bini-Gemignani recurrence. The result has the scalar type of the
    inputs (exact when both are exact).
    """
    if p.degree != q.degree:
        raise DegreeMismatch(f"nominal degrees differ: {p.degree} vs {q.degree}")
    n = p.degree
    if n < 1:
        raise DegreeMismatch("the Bezout matrix needs degree >= 1")
    B = _empty(n, _zero_like(p, q))

    for i in range(1, n + 1):
        B[i - 1, 0] = n * (p[i] * q[0] - p[0] * q[i]) / i

    for j in range(1, n):
        B[n - 1, j] = n * (p[n] * q[j] - p[j] * q[n]) / (n - j)

    for j in range(1, n):
        for i in range(1, n):
            B[i - 1, j] = (n * n) * (p[i] * q[j] - p[j] * q[i]) / (i * (n - j)) + (
                j * (n - i)
            ) * B[i, j - 1] / (i * (n - j))

    if all(isinstance(v, float) for v in B.flat):
        B = B.astype(float)
    return ResultantMatrix(BEZOUT, B, (p.degree, q.degree))


def bezout_power_oracle(p: BernsteinPoly, q: BernsteinPoly) -> ResultantMatrix:
    """Classical Bezout matrix of ``p`` and ``q`` after conversion to monomials.

    Entry ``[i, j]`` is the coefficient of ``s^i t^j`` in the Cayley
    quotient, so it equals ``N @ bernstein_bezout(p, q) @ N.T`` with ``N``
    from :func:`change_of_basis_matrix`. Intended as a test oracle.
    """
    if p.degree != q.degree:
        raise DegreeMismatch(f"nominal degrees differ: {p.degree} vs {q.degree}")
    n = p.degree
    a = power_coefficients(p)
    c = power_coefficients(q)
    B = _empty(n, _zero_like(p, q))
    # p(t)q(s) - p(s)q(t) = sum_{k>l} (a_k c_l - a_l c_k)(t^k s^l - s^k t^l)
    # (t^k s^l - s^k t^l)/(t - s) = sum_{r=0}^{k-l-1} s^(l + k-l-1-r) t^(l+r)
    for k in range(n + 1):
        for l in range(k):
            w = a[k] * c[l] - a[l] * c[k]
            if w == 0:
                continue
            for r in range(k - l):
                B[k - 1 - r, l + r] += w
    return ResultantMatrix(POWER_ORACLE, B, (p.degree, q.degree))


def _unit(n: int, k: int, one) -> BernsteinPoly:
    zero = one * 0
    return BernsteinPoly(one if i == k else zero for i in range(n + 1))


def bernstein_sylvester(p: BernsteinPoly, q: BernsteinPoly) -> ResultantMatrix:
    """Bernstein-Sylvester matrix of ``p`` (degree m) and ``q`` (degree n).

    The (m+n) x (m+n) matrix whose rows are the coordinates, in the basis of
    degree m+n-1, of ``beta_k^(n-1) * p`` (k = 0..n-1) followed by
    ``beta_k^(m-1) * q`` (k = 0..m-1). For any common root ``t0`` it
    annihilates ``bernstein_vector(m + n - 1, t0)``.
    """
    m, n = p.degree, q.degree
    if m < 1 or n < 1:
        raise DegreeMismatch(f"Sylvester matrix needs degrees >= 1, got {m} and {n}")
    one = _zero_like(p, q) + 1
    rows = [multiply(_unit(n - 1, k, one), p).coeffs for k in range(n)]
    rows += [multiply(_unit(m - 1, k, one), q).coeffs for k in range(m)]
    S = np.empty((m + n, m + n), dtype=object)
    for r, row in enumerate(rows):
        S[r, :] = list(row)
    if all(isinstance(v, float) for v in S.flat):
        S = S.astype(float)
    return ResultantMatrix(SYLVESTER, S, (m, n))


def exact_det(M) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    entries = M.entries if isinstance(M, ResultantMatrix) else np.asarray(M, dtype=object)
    if not all(isinstance(v, (Fraction, int)) for v in entries.flat):
        raise NotExact("exact determinant needs rational entries; use the SVD rank instead")
    n = entries.shape[0]
    if n == 0:
        return Fraction(1)
    # clear denominators row by row so elimination runs over the integers
    A = []
    scale = Fraction(1)
    for row in entries:
        row = [Fraction(v) for v in row]
        L = lcm(*(v.denominator for v in row))
        A.append([int(v * L) for v in row])
        scale *= L
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return Fraction(sign * A[n - 1][n - 1]) / scale


def det_is_zero(M) -> bool:
    """True iff the exact determinant of ``M`` vanishes."""
    return exact_det(M) == 0
