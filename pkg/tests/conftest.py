from fractions import Fraction
from math import gcd

import pytest

from cuboidcurves.cuboid import CuboidWitness
from cuboidcurves.sampling import random_parameter_points


def pythagorean_witness(u: int, v: int) -> CuboidWitness:
    """``x = (a/c, b/c, 0)``, ``d = (b/c, a/c, 1)`` from the triple ``(u**2 - v**2, 2uv, u**2 + v**2)``."""
    a, b, c = u * u - v * v, 2 * u * v, u * u + v * v
    x1, x2 = Fraction(a, c), Fraction(b, c)
    return CuboidWitness(x1, x2, 0, x2, x1, 1, 1)


def primitive_generators(count: int) -> list[tuple[int, int]]:
    out = []
    u = 2
    while len(out) < count:
        for v in range(1, u):
            if gcd(u, v) == 1 and (u - v) % 2 == 1:
                out.append((u, v))
        u += 1
    return out[:count]


@pytest.fixture(scope="session")
def pythagorean_witnesses() -> list[CuboidWitness]:
    return [pythagorean_witness(u, v) for u, v in primitive_generators(20)]


@pytest.fixture(scope="session")
def random_points():
    return random_parameter_points(1000, height=100, seed=20240601)
