"""Exception hierarchy shared by the bezinv modules."""


class BezinvError(Exception):
    """Base class for all bezinv errors."""


class ZeroPolynomial(BezinvError, ValueError):
    pass


class NotRepresentable(BezinvError, ValueError):
    pass


class DegreeMismatch(BezinvError, ValueError):
    pass


class NotExact(BezinvError, TypeError):
    pass


class NonFinite(BezinvError, ValueError):
    pass


class DenominatorZero(BezinvError, ZeroDivisionError):
    pass


class DegenerateVector(BezinvError, ValueError):
    pass
