"""Genus-zero curves ``w**2 + 3 = Q * alpha**2``.

A conic is brought to the Legendre equation ``X**2 - MN*Y**2 + 3*Z**2 = 0``
through ``Q = M*m**2 / (N*n**2)``, ``w = X/Z``, ``alpha = Y*N*n / (Z*m)``.
Solvability is decided by the residue criterion; a representative triple is
found by exhaustive search inside Holzer's bounds, or by sympy's ternary
quadratic solver when those bounds exceed the search limit.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import sympy
from sympy.solvers.diophantine.diophantine import diop_ternary_quadratic_normal

from ..arith import is_square_free, is_square_mod, square_free_split
from ..errors import DegenerateParameterError, VerificationError
from ..utils import (
    ensure_nonzero_rational,
    ensure_rational,
    rational,
    validate_integer,
    validate_positive_integer,
)

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_LIMIT = 1_000_000

_x, _y, _z = sympy.symbols("x y z", integer=True)


@dataclass(frozen=True)
class ConicSpec:
    """The conic ``w**2 + 3 = Q * alpha**2`` for a nonzero rational ``Q``."""

    Q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "Q", ensure_nonzero_rational(self.Q, "Q"))

    def contains(self, w: rational, alpha: rational) -> bool:
        w = ensure_rational(w, "w")
        alpha = ensure_rational(alpha, "alpha")
        return w**2 + 3 == self.Q * alpha**2


@dataclass(frozen=True)
class LegendreForm:
    """``Q = M*m**2 / (N*n**2)`` with ``M, N`` square-free and coprime, ``m, n`` coprime."""

    M: int
    N: int
    m: int
    n: int

    @property
    def MN(self) -> int:
        return self.M * self.N

    def value(self) -> Fraction:
        return Fraction(self.M * self.m**2, self.N * self.n**2)


@dataclass(frozen=True)
class LegendreSolution:
    """A nonzero integer triple on ``X**2 - MN*Y**2 + 3*Z**2 = 0``."""

    X: int
    Y: int
    Z: int

    def satisfies(self, MN: int) -> bool:
        return (self.X, self.Y, self.Z) != (0, 0, 0) and (
            self.X**2 - MN * self.Y**2 + 3 * self.Z**2 == 0
        )

    @property
    def at_infinity(self) -> bool:
        return self.Z == 0


@dataclass(frozen=True)
class ConicPoint:
    w: Fraction
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "w", ensure_rational(self.w, "w"))
        object.__setattr__(self, "alpha", ensure_rational(self.alpha, "alpha"))


def _coerce_spec(spec: ConicSpec | rational) -> ConicSpec:
    return spec if isinstance(spec, ConicSpec) else ConicSpec(spec)


def _validate_mn(MN: int) -> int:
    MN = validate_integer(MN, "MN")
    if not is_square_free(MN):
        raise ValueError(f"MN must be a nonzero square-free integer, got {MN}")
    return MN


def normalize_conic(spec: ConicSpec | rational) -> LegendreForm:
    """
    Bring ``Q`` to the canonical form ``M*m**2 / (N*n**2)`` with ``N = 1``.

    Args:
        spec (ConicSpec | rational): The conic, or its ``Q`` directly.

    Returns:
        LegendreForm: ``M`` carries the square-free part and the sign of ``Q``.
    """
    spec = _coerce_spec(spec)
    split = square_free_split(spec.Q)
    return LegendreForm(
        M=split.squarefree,
        N=1,
        m=split.cofactor.numerator,
        n=split.cofactor.denominator,
    )


def legendre_criterion(A: int, B: int, C: int) -> bool:
    """
    Legendre's theorem for ``A*x**2 + B*y**2 + C*z**2 = 0``.

    Args:
        A (int): Nonzero square-free coefficient.
        B (int): Nonzero square-free coefficient.
        C (int): Nonzero square-free coefficient.

    Returns:
        bool: True iff a nonzero integer solution exists, i.e. the coefficients
            are not all of one sign and ``-BC, -CA, -AB`` are squares modulo
            ``|A|, |B|, |C|`` respectively.
    """
    for value, name in ((A, "A"), (B, "B"), (C, "C")):
        validate_integer(value, name)
        if not is_square_free(value):
            raise ValueError(f"{name} must be a nonzero square-free integer, got {value}")
    if gcd(A, B) != 1 or gcd(B, C) != 1 or gcd(C, A) != 1:
        raise ValueError(f"coefficients must be pairwise coprime, got ({A}, {B}, {C})")
    if (A > 0) == (B > 0) == (C > 0):
        return False
    return (
        is_square_mod(-B * C, abs(A))
        and is_square_mod(-C * A, abs(B))
        and is_square_mod(-A * B, abs(C))
    )


def legendre_solvable(MN: int) -> bool:
    """
    Decide whether ``X**2 - MN*Y**2 + 3*Z**2 = 0`` has a nonzero integer solution.

    Args:
        MN (int): Nonzero square-free integer.

    Returns:
        bool: For ``3 ∤ MN``: ``MN > 0``, ``-3`` a square mod ``MN`` and ``MN``
            a square mod 3. For ``3 | MN``: ``MN > 0``, ``-3`` a square mod
            ``MN`` and ``MN/3`` a square mod 3.
    """
    MN = _validate_mn(MN)
    if MN < 0:
        return False
    if not is_square_mod(-3, MN):
        return False
    if MN % 3:
        return is_square_mod(MN, 3)
    return is_square_mod(MN // 3, 3)


def holzer_bounds(MN: int) -> tuple[int, int, int]:
    """Bounds ``(x_max, y_max, z_max)`` containing a solution whenever one exists."""
    MN = validate_positive_integer(MN, "MN")
    # sqrt(3) rounded up
    return isqrt(3 * MN), 2, isqrt(MN)


def _ranking(sol: LegendreSolution) -> tuple:
    triple = (sol.X, sol.Y, sol.Z)
    return (0 in triple, max(triple), *triple)


def search_legendre(MN: int, affine: bool = False) -> LegendreSolution | None:
    """
    Exhaustive search inside Holzer's bounds.

    Args:
        MN (int): Positive integer.
        affine (bool, optional): Only accept ``Z != 0``. Defaults to False.

    Returns:
        LegendreSolution | None: The best nonnegative triple under the order
            (no zero component first, then smaller maximum, then
            lexicographic), or None when the box holds no solution.
    """
    MN = validate_positive_integer(MN, "MN")
    x_max, y_max, z_max = holzer_bounds(MN)
    best: LegendreSolution | None = None
    for Y in range(1, y_max + 1):
        for Z in range(1 if affine else 0, z_max + 1):
            rest = MN * Y * Y - 3 * Z * Z
            if rest < 0:
                break
            X = isqrt(rest)
            if X * X != rest or X > x_max:
                continue
            candidate = LegendreSolution(X, Y, Z)
            if best is None or _ranking(candidate) < _ranking(best):
                best = candidate
    return best


def _construct_legendre(MN: int) -> LegendreSolution | None:
    X, Y, Z = diop_ternary_quadratic_normal(_x**2 - MN * _y**2 + 3 * _z**2)
    if X is None:
        return None
    sol = LegendreSolution(abs(int(X)), abs(int(Y)), abs(int(Z)))
    if not sol.satisfies(MN):
        raise VerificationError(f"ternary solver returned {sol} off the form for MN={MN}")
    return sol


def solve_legendre(
    MN: int, search_limit: int = DEFAULT_SEARCH_LIMIT, affine: bool = False
) -> LegendreSolution | None:
    """
    Find a nonzero solution of ``X**2 - MN*Y**2 + 3*Z**2 = 0``.

    Args:
        MN (int): Nonzero square-free integer.
        search_limit (int, optional): Largest ``z_max`` walked exhaustively;
            beyond it the point comes from sympy's ternary solver. Defaults to 1_000_000.
        affine (bool, optional): Require ``Z != 0``. Defaults to False.

    Returns:
        LegendreSolution | None: A verified triple, or None when the equation
            is unsolvable.

    Raises:
        VerificationError: If the criterion and the search disagree.
    """
    MN = _validate_mn(MN)
    search_limit = validate_positive_integer(search_limit, "search_limit")
    solvable = legendre_solvable(MN)
    if not solvable:
        return None
    if holzer_bounds(MN)[2] > search_limit:
        logger.debug("MN=%d beyond search limit %d, using the ternary solver", MN, search_limit)
        sol = _construct_legendre(MN)
        # Z = 0 forces MN to be a square, which is only MN = 1
        if sol is not None and affine and sol.at_infinity:
            sol = None
    else:
        sol = search_legendre(MN, affine=affine)
    if sol is None:
        raise VerificationError(f"criterion says MN={MN} is solvable but no triple was found")
    if not sol.satisfies(MN):
        raise VerificationError(f"{sol} does not satisfy the form for MN={MN}")
    return sol


def find_conic_point(
    spec: ConicSpec | rational, search_limit: int = DEFAULT_SEARCH_LIMIT
) -> ConicPoint | None:
    """
    Find an affine rational point of the conic.

    Args:
        spec (ConicSpec | rational): The conic, or its ``Q``.
        search_limit (int, optional): Passed on to :func:`solve_legendre`. Defaults to 1_000_000.

    Returns:
        ConicPoint | None: A point, or None when the conic has no rational point.
    """
    spec = _coerce_spec(spec)
    form = normalize_conic(spec)
    sol = solve_legendre(form.MN, search_limit=search_limit, affine=True)
    if sol is None:
        return None
    w = Fraction(sol.X, sol.Z)
    alpha = Fraction(sol.Y * form.N * form.n, sol.Z * form.m)
    if not spec.contains(w, alpha):
        raise VerificationError(f"({w}, {alpha}) is not on the conic with Q={spec.Q}")
    return ConicPoint(w, alpha)


def parametrize_conic(
    spec: ConicSpec | rational, base: ConicPoint, t: rational
) -> ConicPoint:
    """
    Rational point of the conic with parameter ``t`` relative to ``base``.

    Args:
        spec (ConicSpec | rational): The conic, or its ``Q``.
        base (ConicPoint): A point on the conic.
        t (rational): Parameter.

    Returns:
        ConicPoint: The point with parameter ``t``; ``t = 0`` gives ``base``.

    Raises:
        DegenerateParameterError: If ``1 - Q*t**2 = 0``.
    """
    spec = _coerce_spec(spec)
    t = ensure_rational(t, "t")
    if not spec.contains(base.w, base.alpha):
        raise ValueError(f"base ({base.w}, {base.alpha}) is not on the conic with Q={spec.Q}")
    Q, w0, a0 = spec.Q, base.w, base.alpha
    den = 1 - Q * t**2
    if den == 0:
        raise DegenerateParameterError(f"1 - Q*t**2 vanishes for Q={Q}, t={t}")
    w = (w0 + 2 * Q * a0 * t + Q * w0 * t**2) / den
    alpha = (a0 + 2 * w0 * t + Q * a0 * t**2) / den
    if not spec.contains(w, alpha):
        raise VerificationError(f"parametrized point ({w}, {alpha}) left the conic Q={Q}")
    return ConicPoint(w, alpha)


def parameter_from_point(base: ConicPoint, point: ConicPoint) -> Fraction:
    """Parameter ``t = (alpha - alpha0) / (w + w0)`` of ``point`` seen from ``base``."""
    s = point.w + base.w
    if s == 0:
        raise DegenerateParameterError(
            f"w + w0 vanishes for base ({base.w}, {base.alpha}) and point ({point.w}, {point.alpha})"
        )
    return (point.alpha - base.alpha) / s
