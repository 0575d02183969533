import random
from fractions import Fraction
from pathlib import Path

import pytest

from bezinv import BernsteinPoly, GeneralRationalCurve, RationalBezierCurve

DATA = Path(__file__).parent / "data"

EX2_POINTS = [(14, 14), (11, 15), (9, 15), (7, 15), (4, 14), (3, 12), (3, 10), (7, 8),
              (4, 6), (14, 4), (12, 2), (8, 2), (6, 2), (4, 3), (3, 4), (2, 5)]
EX2_WEIGHTS = [2, 2, 2, 1, 2, 5, 5, 1, 3, 3, 3, 3, 2, 1, 1, 1]


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def example2():
    return RationalBezierCurve(EX2_POINTS, EX2_WEIGHTS)


@pytest.fixture
def example1():
    return GeneralRationalCurve(
        BernsteinPoly([4, 4, 3, 3, 7]),
        BernsteinPoly([1, 1, 1, 1, 3]),
        BernsteinPoly([2, 3, 3, 3, 4]),
        BernsteinPoly([1, 1, 1, 1, 1]),
    )


@pytest.fixture
def example4():
    return RationalBezierCurve([(1, 9), (2, 1), (5, 1), (4, 1)], [1, 2, 2, 1])


def random_curve(rng: random.Random, degree: int) -> RationalBezierCurve:
    """Integer control points in [-10, 10], weights in [1/4, 4]."""
    pts = [(rng.randint(-10, 10), rng.randint(-10, 10)) for _ in range(degree + 1)]
    weights = [Fraction(rng.randint(1, 16), 4) for _ in range(degree + 1)]
    return RationalBezierCurve(pts, weights)


def random_poly(rng: random.Random, degree: int, lo=-20, hi=20, den=7) -> BernsteinPoly:
    return BernsteinPoly(Fraction(rng.randint(lo, hi), rng.randint(1, den)) for _ in range(degree + 1))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
