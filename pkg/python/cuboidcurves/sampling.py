"""Seeded random exact inputs: rationals of bounded height and non-singular parameter points."""

from fractions import Fraction

import numpy as np

from .parametrization import ParameterPoint, singular_locus_check
from .types import FormulaVariant
from .utils import validate_integer, validate_positive_integer

# attempts per requested point before giving up on non-singular draws
_MAX_REJECTIONS = 1000


def _generator(seed: int | np.random.Generator | None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if seed is not None:
        validate_integer(seed, "seed")
    return np.random.default_rng(seed)


def random_rational(rng: np.random.Generator, height: int) -> Fraction:
    """A rational ``p/q`` with ``|p| <= height`` and ``1 <= q <= height``."""
    num = int(rng.integers(-height, height, endpoint=True))
    den = int(rng.integers(1, height, endpoint=True))
    return Fraction(num, den)


def random_rationals(
    count: int, height: int = 100, seed: int | np.random.Generator | None = None
) -> list[Fraction]:
    """
    Draw rationals of bounded height.

    Args:
        count (int): Number of values.
        height (int, optional): Bound on numerator and denominator. Defaults to 100.
        seed (int | np.random.Generator | None, optional): Seed or generator. Defaults to None.

    Returns:
        list[Fraction]: ``count`` rationals.
    """
    count = validate_positive_integer(count, "count")
    height = validate_positive_integer(height, "height")
    rng = _generator(seed)
    return [random_rational(rng, height) for _ in range(count)]


def random_parameter_points(
    count: int,
    height: int = 100,
    seed: int | np.random.Generator | None = None,
    variant: FormulaVariant = FormulaVariant.Printed,
) -> list[ParameterPoint]:
    """
    Draw parameter points off the singular locus.

    Args:
        count (int): Number of points.
        height (int, optional): Bound on numerators and denominators. Defaults to 100.
        seed (int | np.random.Generator | None, optional): Seed or generator. Defaults to None.
        variant (FormulaVariant, optional): Decides which factors are singular. Defaults to Printed.

    Returns:
        list[ParameterPoint]: ``count`` points with an empty singular locus check.
    """
    count = validate_positive_integer(count, "count")
    height = validate_positive_integer(height, "height")
    rng = _generator(seed)
    points: list[ParameterPoint] = []
    rejected = 0
    while len(points) < count:
        p = ParameterPoint(random_rational(rng, height), random_rational(rng, height))
        if singular_locus_check(p, variant):
            rejected += 1
            if rejected > _MAX_REJECTIONS * count:
                raise RuntimeError(f"too many singular draws at height {height}")
            continue
        points.append(p)
    return points
