from fractions import Fraction

import pytest

from cuboidcurves.polynomial import (
    BivariatePolynomial,
    horner,
    primitive_integer_coefficients,
    rational_roots,
)
from cuboidcurves.sampling import random_rationals


def _expand(roots, extra=(1,)):
    """Coefficients of ``extra(x) * prod(x - r)`` from highest degree down."""
    coeffs = [Fraction(a) for a in extra]
    for r in roots:
        shifted = coeffs + [Fraction(0)]
        for i in range(1, len(shifted)):
            shifted[i] -= r * coeffs[i - 1]
        coeffs = shifted
    return coeffs


def test_horner():
    assert horner([1, -6, 11, -6], Fraction(2)) == 0
    assert horner([2, 0, 1], Fraction(1, 2)) == Fraction(3, 2)
    assert horner([], Fraction(5)) == 0


def test_bivariate_polynomial_evaluates_like_sympy_expression():
    poly = BivariatePolynomial("3*b**2*c - c**3/2 + b - 7", "sample")
    for b, c in zip(random_rationals(20, seed=1), random_rationals(20, seed=2)):
        assert poly(b, c) == 3 * b**2 * c - c**3 / 2 + b - 7
    assert poly.degree_b == 2
    assert poly.degree_c == 3
    assert poly.rows[2][1] == 3
    assert poly.rows[0][3] == Fraction(-1, 2)
    assert "sample" in repr(poly)


def test_bivariate_polynomial_rejects_zero():
    with pytest.raises(ValueError):
        BivariatePolynomial("b - b", "zero")


def test_primitive_integer_coefficients():
    assert primitive_integer_coefficients([0, Fraction(-1, 2), Fraction(1, 3), 1]) == [3, -2, -6]
    assert primitive_integer_coefficients([4, 8, 12]) == [1, 2, 3]
    with pytest.raises(ValueError):
        primitive_integer_coefficients([0, 0])


@pytest.mark.parametrize(
    "coeffs, roots",
    [
        ([1, -6, 11, -6], [1, 2, 3]),
        ([1, 2, Fraction(-11, 4), Fraction(3, 4)], [-3, Fraction(1, 2), Fraction(1, 2)]),
        ([1, 0, 0], [0, 0]),
        ([1, 0, 1], []),
        ([0, 0, 2, -1], [Fraction(1, 2)]),
        ([5], []),
        ([6, -5, 1], [Fraction(1, 3), Fraction(1, 2)]),
    ],
)
@pytest.mark.parametrize("method", ["auto", "divisors", "factor"])
def test_rational_roots_examples(coeffs, roots, method):
    assert rational_roots(coeffs, method=method) == roots


def test_rational_roots_methods_agree():
    values = random_rationals(60, height=40, seed=3)
    for i in range(0, 60, 4):
        roots = sorted(values[i : i + 3])
        # an irreducible quadratic factor keeps the non-rational part honest
        coeffs = _expand(roots, extra=(1, values[i + 3], 1 + values[i + 3] ** 2))
        by_divisors = rational_roots(coeffs, method="divisors")
        by_factoring = rational_roots(coeffs, method="factor")
        assert by_divisors == by_factoring
        for r in roots:
            assert r in by_divisors


def test_rational_roots_large_coefficients():
    big = 2**70
    assert rational_roots([1, -(big + 3), 3 * big]) == [3, big]


def test_rational_roots_rejects_zero_polynomial_and_unknown_method():
    with pytest.raises(ValueError):
        rational_roots([0, 0, 0])
    with pytest.raises(ValueError):
        rational_roots([1, -1], method="newton")
