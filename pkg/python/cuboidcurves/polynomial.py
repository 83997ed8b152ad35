"""Exact polynomial helpers shared by the formula, curve and witness layers."""

import logging
from collections.abc import Sequence
from fractions import Fraction
from math import gcd, lcm
from typing import Literal

import sympy
from sympy import Poly, divisors

from .utils import ensure_rational, rational

logger = logging.getLogger(__name__)

_B, _C = sympy.symbols("b c")
_X = sympy.Symbol("x")

# beyond 64-bit extreme coefficients the divisor lists get long; factor instead
DIVISOR_BIT_CUTOFF = 64

RootMethod = Literal["auto", "divisors", "factor"]


def _to_fraction(coeff: sympy.Rational) -> Fraction:
    return Fraction(int(coeff.p), int(coeff.q))


def horner(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    """Evaluate a univariate polynomial given its coefficients from highest degree down."""
    result = Fraction(0)
    for a in coeffs:
        result = result * x + a
    return result


class BivariatePolynomial:
    def __init__(self, expression: str, name: str = ""):
        """
        Parse a polynomial in ``b`` and ``c`` with rational coefficients.

        Args:
            expression (str): Polynomial in sympy syntax, products and powers allowed.
            name (str, optional): Label used in error messages. Defaults to "".
        """
        poly = Poly(sympy.sympify(expression), _B, _C, domain="QQ")
        if poly.is_zero:
            raise ValueError(f"polynomial {name or expression!r} is identically zero")
        self.name = name
        self.expression = expression
        self.degree_b = poly.degree(_B)
        self.degree_c = poly.degree(_C)
        # rows[i][j] is the coefficient of b**i * c**j
        self.rows: list[list[Fraction]] = [
            [Fraction(0)] * (self.degree_c + 1) for _ in range(self.degree_b + 1)
        ]
        for (i, j), coeff in poly.terms():
            self.rows[i][j] = _to_fraction(coeff)

    def __call__(self, b: Fraction, c: Fraction) -> Fraction:
        return self.evaluate(b, c)

    def __repr__(self) -> str:
        label = self.name or self.expression
        return f"BivariatePolynomial({label!r}, deg_b={self.degree_b}, deg_c={self.degree_c})"

    def evaluate(self, b: Fraction, c: Fraction) -> Fraction:
        """Nested Horner evaluation: each row in ``c`` first, then the rows in ``b``."""
        result = Fraction(0)
        for row in reversed(self.rows):
            result = result * b + horner(row[::-1], c)
        return result


def primitive_integer_coefficients(coeffs: Sequence[rational]) -> list[int]:
    """
    Scale rational coefficients to a primitive integer polynomial.

    Leading zeros are dropped and the leading coefficient is made positive; the
    roots are unchanged.

    Args:
        coeffs (Sequence[rational]): Coefficients from highest degree down.

    Returns:
        list[int]: Integer coefficients with gcd 1.
    """
    values = [ensure_rational(a, f"coeffs[{i}]") for i, a in enumerate(coeffs)]
    while values and values[0] == 0:
        values.pop(0)
    if not values:
        raise ValueError("polynomial is identically zero; every rational is a root")
    scale = lcm(*(a.denominator for a in values))
    ints = [int(a * scale) for a in values]
    content = gcd(*ints)
    if ints[0] < 0:
        content = -content
    return [a // content for a in ints]


def _divide_linear(ints: list[int], p: int, q: int) -> list[int] | None:
    """Exact quotient of ``ints`` by ``q*x - p`` over the integers, or None."""
    quotient: list[int] = []
    carry = 0
    for a in ints[:-1]:
        numerator = a + p * carry
        if numerator % q:
            return None
        carry = numerator // q
        quotient.append(carry)
    if ints[-1] + p * carry != 0:
        return None
    return quotient


def _roots_by_divisors(ints: list[int]) -> list[Fraction]:
    roots: list[Fraction] = []
    lead, const = ints[0], ints[-1]
    f_one = sum(ints)
    f_minus_one = sum(a if (len(ints) - 1 - i) % 2 == 0 else -a for i, a in enumerate(ints))
    for q in divisors(abs(lead)):
        for p_abs in divisors(abs(const)):
            if gcd(p_abs, q) != 1:
                continue
            for p in (p_abs, -p_abs):
                # p/q a root forces (q - p) | f(1) and (q + p) | f(-1)
                if q != p and f_one % (q - p):
                    continue
                if q != -p and f_minus_one % (q + p):
                    continue
                while len(ints) > 1:
                    quotient = _divide_linear(ints, p, q)
                    if quotient is None:
                        break
                    roots.append(Fraction(p, q))
                    ints = quotient
    return roots


def _roots_by_factoring(ints: list[int]) -> list[Fraction]:
    roots: list[Fraction] = []
    _, factors = Poly(ints, _X).factor_list()
    for factor, multiplicity in factors:
        if factor.degree() != 1:
            continue
        a, b = (int(v) for v in factor.all_coeffs())
        roots.extend([Fraction(-b, a)] * multiplicity)
    return roots


def rational_roots(
    coeffs: Sequence[rational], method: RootMethod = "auto"
) -> list[Fraction]:
    """
    All rational roots of a univariate polynomial, with multiplicity.

    Denominators are cleared to a primitive integer polynomial; zero roots are
    split off, then the rational root theorem candidates ``p/q`` with
    ``p | a_0`` and ``q | a_n`` are tried by exact synthetic division. When an
    extreme coefficient exceeds the divisor cutoff, the roots are read off the
    linear factors of sympy's factorization instead.

    Args:
        coeffs (Sequence[rational]): Coefficients from highest degree down.
        method (RootMethod, optional): "divisors", "factor" or "auto". Defaults to "auto".

    Returns:
        list[Fraction]: Roots sorted ascending, repeated by multiplicity.
    """
    if method not in ("auto", "divisors", "factor"):
        raise ValueError(f"method must be 'auto', 'divisors' or 'factor', got {method!r}")
    ints = primitive_integer_coefficients(coeffs)
    roots: list[Fraction] = []
    while len(ints) > 1 and ints[-1] == 0:
        roots.append(Fraction(0))
        ints = ints[:-1]
    if len(ints) > 1:
        if method == "auto":
            bits = max(abs(ints[0]), abs(ints[-1])).bit_length()
            method = "divisors" if bits <= DIVISOR_BIT_CUTOFF else "factor"
            if method == "factor":
                logger.debug("extreme coefficients of %d bits, factoring instead", bits)
        if method == "divisors":
            roots.extend(_roots_by_divisors(ints))
        else:
            roots.extend(_roots_by_factoring(ints))
    return sorted(roots)
