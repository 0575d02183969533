"""Parameter inversion for rational Bezier curves via Bernstein resultant matrices and the SVD."""

from .bernstein import (
    BernsteinPoly,
    bernstein_vector,
    change_of_basis_matrix,
    degree_reduce,
    elevate,
    multiply,
    power_degree,
)
from .errors import (
    BezinvError,
    DegenerateVector,
    DegreeMismatch,
    DenominatorZero,
    NonFinite,
    NotExact,
    NotRepresentable,
    ZeroPolynomial,
)
from .inversion import (
    GeneralRationalCurve,
    InversionReport,
    QueryPoint,
    RationalBezierCurve,
    build_pq,
    diagnose,
    eval_curve,
    invert,
    recover_parameter,
)
from .resultant import (
    ResultantMatrix,
    bernstein_bezout,
    bernstein_sylvester,
    bezout_power_oracle,
    det_is_zero,
)
from .spectral import RankPolicy, SvdResult, numerical_nullspace, svd

__version__ = "0.1.0"
