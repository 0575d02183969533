"""SVD and the numerical-rank policy.

The decomposition itself is delegated to LAPACK through ``numpy.linalg.svd``
(divide-and-conquer driver), which is deterministic for a fixed input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import NonFinite

__all__ = ["SvdResult", "RankPolicy", "svd", "numerical_nullspace", "DEFAULT_RANK_TOL"]

DEFAULT_RANK_TOL = 1e-6


@dataclass(frozen=True)
class SvdResult:
    """``A = U @ diag(singular_values) @ right_vectors.T``.

    ``right_vectors`` holds the columns of V (shape ``(ncols, ncols)``);
    ``left_vectors`` is U, or None when it was not requested.
    """

    singular_values: np.ndarray
    right_vectors: np.ndarray
    left_vectors: Optional[np.ndarray] = None

    @property
    def order(self) -> int:
        return self.right_vectors.shape[0]


@dataclass(frozen=True)
class RankPolicy:
    """A singular value ``s`` is numerically zero iff ``s <= max(tau * s_max, floor)``."""

    relative_threshold: float = DEFAULT_RANK_TOL
    absolute_floor: float = 0.0

    def __post_init__(self):
        if not self.relative_threshold > 0:
            raise ValueError("relative_threshold must be positive")
        if self.absolute_floor < 0:
            raise ValueError("absolute_floor must be nonnegative")

    def cutoff(self, sigma_max: float) -> float:
        return max(self.relative_threshold * sigma_max, self.absolute_floor)


def svd(A, compute_left: bool = True) -> SvdResult:
    A = np.asarray(A, dtype=float)
    if A.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise NonFinite("matrix has NaN or infinite entries")
    U, s, Vt = np.linalg.svd(A, full_matrices=True)
    return SvdResult(s, Vt.T, U if compute_left else None)


def numerical_nullspace(s: SvdResult, policy: RankPolicy = RankPolicy()):
    """Return ``(nullity, basis)`` where basis columns are the trailing columns of V."""
    sv = s.singular_values
    ncols = s.order
    if sv.size == 0:
        nullity = ncols
    else:
        cut = policy.cutoff(float(sv[0]))
        rank = int(np.count_nonzero(sv > cut))
        nullity = ncols - rank
    return nullity, s.right_vectors[:, ncols - nullity:]
