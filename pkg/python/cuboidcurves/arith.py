"""Exact arithmetic primitives over the rationals.

Integer factorization is delegated to :func:`sympy.factorint` (trial division
followed by Pollard rho and p-1), which covers every input produced at desk
scale. All values here are :class:`fractions.Fraction` or ``int``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from sympy.ntheory import factorint, is_quad_residue

from .utils import (
    ensure_nonzero_rational,
    ensure_rational,
    rational,
    validate_integer,
    validate_nonzero_integer,
    validate_positive_integer,
)


@dataclass(frozen=True)
class PrimeFactorization:
    """Signed prime factorization ``sign * prod(p**e)`` of a nonzero rational.

    Attributes:
        sign (int): +1 or -1.
        factors (tuple[tuple[int, int], ...]): (prime, exponent) pairs with
            strictly increasing primes and nonzero exponents. Negative
            exponents belong to the denominator.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> Fraction:
        result = Fraction(self.sign)
        for p, e in self.factors:
            result *= Fraction(p) ** e
        return result

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, prime: int) -> int:
        return dict(self.factors).get(prime, 0)


@dataclass(frozen=True)
class SquareFreeSplit:
    """``squarefree * cofactor**2`` with a square-free integer and a positive rational."""

    squarefree: int
    cofactor: Fraction

    def value(self) -> Fraction:
        return self.squarefree * self.cofactor**2


def factorize(n: int) -> PrimeFactorization:
    """
    Factor a nonzero integer into primes.

    Args:
        n (int): Nonzero integer.

    Returns:
        PrimeFactorization: Sign and ordered (prime, exponent) pairs; 1 and -1
            have no factors.
    """
    n = validate_nonzero_integer(n, "n")
    factors = tuple(sorted(factorint(abs(n)).items()))
    return PrimeFactorization(sign=1 if n > 0 else -1, factors=factors)


def factorize_rational(q: rational) -> PrimeFactorization:
    """Factor a nonzero rational; denominator primes get negative exponents."""
    q = ensure_nonzero_rational(q, "q")
    merged = dict(factorint(abs(q.numerator)))
    # numerator and denominator are coprime, so the keys never collide
    merged.update({p: -e for p, e in factorint(q.denominator).items()})
    return PrimeFactorization(
        sign=1 if q > 0 else -1, factors=tuple(sorted(merged.items()))
    )


def is_square_free(n: int) -> bool:
    n = validate_integer(n, "n")
    if n == 0:
        return False
    return all(e == 1 for e in factorint(abs(n)).values())


def square_free_split(q: rational) -> SquareFreeSplit:
    """
    Write a nonzero rational as ``s * m**2``.

    Args:
        q (rational): Nonzero rational number.

    Returns:
        SquareFreeSplit: ``s`` square-free and carrying the sign of ``q``,
            ``m`` a positive rational.
    """
    q = ensure_nonzero_rational(q, "q")
    # q = (num * den) / den**2, so only the integer num * den needs splitting
    fac = factorize_rational(q)
    squarefree = fac.sign
    root = 1
    for p, e in fac.factors:
        e = abs(e)
        if e % 2:
            squarefree *= p
        root *= p ** (e // 2)
    return SquareFreeSplit(squarefree=squarefree, cofactor=Fraction(root, q.denominator))


def rational_sqrt(q: rational) -> Fraction | None:
    """Nonnegative rational square root of ``q``, or None when ``q`` is not a square."""
    q = ensure_rational(q, "q")
    if q < 0:
        return None
    num, den = isqrt(q.numerator), isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        return None
    return Fraction(num, den)


def cube_square_match(x: rational, y: rational) -> Fraction | None:
    """
    Find alpha with ``x = alpha**2`` and ``y = alpha**3`` when ``x**3 = y**2``.

    Args:
        x (rational): First rational.
        y (rational): Second rational.

    Returns:
        Fraction | None: alpha, or None when ``x**3 != y**2``.
    """
    x = ensure_rational(x, "x")
    y = ensure_rational(y, "y")
    if x**3 != y**2:
        return None
    if x == 0:
        return Fraction(0)
    alpha = y / x
    if alpha**2 != x or alpha**3 != y:
        raise ArithmeticError(f"ratio {alpha} does not match x={x}, y={y}")
    return alpha


def cube_square_match_by_factorization(x: rational, y: rational) -> Fraction | None:
    """Same relation as :func:`cube_square_match`, decided through prime exponents.

    ``x**3 = y**2`` forces ``x > 0``, equal prime supports and exponents
    ``3*beta = 2*gamma``; then ``alpha`` carries ``beta / 2`` on each prime and
    the sign of ``y``.
    """
    x = ensure_rational(x, "x")
    y = ensure_rational(y, "y")
    if x == 0 or y == 0:
        return Fraction(0) if x == y else None
    if x < 0:
        return None
    fx = factorize_rational(x)
    fy = factorize_rational(y)
    if fx.primes() != fy.primes():
        return None
    alpha = Fraction(fy.sign)
    for (p, beta), (_, gamma) in zip(fx.factors, fy.factors):
        if 3 * beta != 2 * gamma:
            return None
        alpha *= Fraction(p) ** (beta // 2)
    return alpha


def is_square_mod(a: int, n: int) -> bool:
    """
    Decide whether ``z**2 = a (mod n)`` is solvable.

    The modulus is split into prime powers and the answers are combined by the
    Chinese remainder theorem.

    Args:
        a (int): Residue to test.
        n (int): Positive modulus.

    Returns:
        bool: True iff ``a`` is a square modulo ``n``.
    """
    a = validate_integer(a, "a")
    n = validate_positive_integer(n, "n")
    if n == 1:
        return True
    return all(
        is_quad_residue(a % p**e, p**e) for p, e in factorint(n).items()
    )
