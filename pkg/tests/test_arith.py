from fractions import Fraction

import pytest

from cuboidcurves.arith import (
    cube_square_match,
    cube_square_match_by_factorization,
    factorize,
    factorize_rational,
    is_square_free,
    is_square_mod,
    rational_sqrt,
    square_free_split,
)
from cuboidcurves.sampling import random_rationals


@pytest.mark.parametrize(
    "n, sign, factors",
    [
        (12, 1, ((2, 2), (3, 1))),
        (-12, -1, ((2, 2), (3, 1))),
        (1, 1, ()),
        (-1, -1, ()),
        (999983, 1, ((999983, 1),)),
        (2**10 * 3**5 * 7, 1, ((2, 10), (3, 5), (7, 1))),
    ],
)
def test_factorize(n, sign, factors):
    fac = factorize(n)
    assert fac.sign == sign
    assert fac.factors == factors
    assert fac.value() == n


def test_factorize_rejects_zero_and_non_integers():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(TypeError):
        factorize(True)
    with pytest.raises(TypeError):
        factorize(1.5)


def test_factorize_rational():
    fac = factorize_rational(Fraction(-75, 8))
    assert fac.sign == -1
    assert fac.factors == ((2, -3), (3, 1), (5, 2))
    assert fac.value() == Fraction(-75, 8)
    assert fac.exponent(2) == -3
    assert fac.exponent(11) == 0


@pytest.mark.parametrize(
    "n, expected",
    [(0, False), (1, True), (-1, True), (12, False), (30, True), (-30, True), (49, False)],
)
def test_is_square_free(n, expected):
    assert is_square_free(n) is expected


@pytest.mark.parametrize(
    "q, squarefree, cofactor",
    [
        (4, 1, Fraction(2)),
        (18, 2, Fraction(3)),
        (Fraction(-75, 8), -6, Fraction(5, 4)),
        (Fraction(33, 2), 66, Fraction(1, 2)),
        (-1, -1, Fraction(1)),
    ],
)
def test_square_free_split(q, squarefree, cofactor):
    split = square_free_split(q)
    assert split.squarefree == squarefree
    assert split.cofactor == cofactor


def test_square_free_split_reconstructs():
    for q in random_rationals(300, height=10**6, seed=7):
        if q == 0:
            continue
        split = square_free_split(q)
        assert split.value() == q
        assert is_square_free(split.squarefree)
        assert split.cofactor > 0


def test_square_free_split_rejects_zero():
    with pytest.raises(ValueError):
        square_free_split(0)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(0) == 0
    assert rational_sqrt(2) is None
    assert rational_sqrt(-4) is None
    assert rational_sqrt(Fraction(4, 3)) is None


@pytest.mark.parametrize(
    "x, y, alpha",
    [
        (4, 8, 2),
        (4, -8, -2),
        (Fraction(9, 4), Fraction(27, 8), Fraction(3, 2)),
        (0, 0, 0),
        (1, 1, 1),
    ],
)
def test_cube_square_match_examples(x, y, alpha):
    assert cube_square_match(x, y) == alpha
    assert cube_square_match_by_factorization(x, y) == alpha


@pytest.mark.parametrize("x, y", [(2, 3), (4, 9), (-4, 8), (0, 1), (1, 0), (Fraction(1, 4), 1)])
def test_cube_square_match_rejects(x, y):
    assert cube_square_match(x, y) is None
    assert cube_square_match_by_factorization(x, y) is None


def test_cube_square_match_round_trip():
    for alpha in random_rationals(200, height=10**6, seed=11):
        assert cube_square_match(alpha**2, alpha**3) == alpha
        assert cube_square_match_by_factorization(alpha**2, alpha**3) == alpha


def test_cube_square_match_near_misses():
    # (alpha**3 + 1)**2 == alpha**6 would need alpha**3 == -1/2
    for alpha in random_rationals(50, height=1000, seed=13):
        assert cube_square_match(alpha**2, alpha**3 + 1) is None
        assert cube_square_match_by_factorization(alpha**2, alpha**3 + 1) is None


def test_cube_square_match_positive_x():
    for alpha in random_rationals(50, height=100, seed=17):
        x, y = alpha**2, alpha**3
        if cube_square_match(x, y) is not None and x != 0:
            assert x > 0


@pytest.mark.parametrize(
    "a, n, expected",
    [
        (-3, 7, True),
        (-3, 5, False),
        (2, 3, False),
        (1, 3, True),
        (-3, 1, True),
        (-3, 13, True),
        (-3, 4, True),
        (-3, 8, False),
        (0, 9, True),
    ],
)
def test_is_square_mod_examples(a, n, expected):
    assert is_square_mod(a, n) is expected


def _squares(n: int) -> set[int]:
    return {z * z % n for z in range(n)}


def test_is_square_mod_exhaustive_small():
    for n in range(1, 151):
        squares = _squares(n)
        for a in range(n):
            assert is_square_mod(a, n) is (a in squares), (a, n)


def test_is_square_mod_agrees_with_search():
    for n in range(1, 1001):
        squares = _squares(n)
        for a in (-3, -1, 2, 3, 6, n - 1):
            assert is_square_mod(a, n) is (a % n in squares), (a, n)


def test_is_square_mod_rejects_bad_modulus():
    with pytest.raises(ValueError):
        is_square_mod(1, 0)
