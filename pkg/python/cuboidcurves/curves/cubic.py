"""Genus-one curves ``2 * (w**2 - 1) = P * alpha**3`` and the sextic surfaces they meet."""

import logging
from dataclasses import dataclass
from fractions import Fraction

from ..arith import rational_sqrt
from ..errors import (
    DegenerateCurveError,
    ExceptionalPointError,
    SingularInputError,
    VerificationError,
)
from ..parametrization import CurvePair, ParameterPoint, curve_pair
from ..polynomial import horner, rational_roots
from ..types import SingularFactor
from ..utils import ensure_rational, rational, validate_branch

logger = logging.getLogger(__name__)

_Q_FACTORS = {1: SingularFactor.Q1, 2: SingularFactor.Q2}
_P_FACTORS = {1: SingularFactor.P1, 2: SingularFactor.P2}


@dataclass(frozen=True)
class CubicCurveSpec:
    """The cubic ``2 * (w**2 - 1) = P * alpha**3``; ``P = 0`` is degenerate."""

    P: Fraction

    def __post_init__(self):
        object.__setattr__(self, "P", ensure_rational(self.P, "P"))


@dataclass(frozen=True)
class SurfacePoint:
    """A rational ``w`` over ``(b, c)`` on the sextic surface of ``branch``."""

    b: Fraction
    c: Fraction
    w: Fraction
    branch: int

    def __post_init__(self):
        object.__setattr__(self, "b", ensure_rational(self.b, "b"))
        object.__setattr__(self, "c", ensure_rational(self.c, "c"))
        object.__setattr__(self, "w", ensure_rational(self.w, "w"))
        validate_branch(self.branch)

    @property
    def parameter(self) -> ParameterPoint:
        return ParameterPoint(self.b, self.c)


@dataclass(frozen=True)
class LiftedPoint:
    """A surface point with its ``alpha`` on both the conic and the cubic of its branch."""

    point: SurfacePoint
    alpha: Fraction


@dataclass(frozen=True)
class MordellForm:
    """The cubic rewritten as ``Y**2 = X**3 + k`` through ``X = h*alpha``, ``Y = h*w``, ``h = P/2``."""

    P: Fraction
    k: Fraction

    @property
    def scale(self) -> Fraction:
        return self.P / 2

    def contains(self, X: rational, Y: rational) -> bool:
        X = ensure_rational(X, "X")
        Y = ensure_rational(Y, "Y")
        return Y**2 == X**3 + self.k

    def forward(self, w: rational, alpha: rational) -> tuple[Fraction, Fraction]:
        """Map a point ``(w, alpha)`` of the cubic to ``(X, Y)``."""
        w = ensure_rational(w, "w")
        alpha = ensure_rational(alpha, "alpha")
        if not cubic_contains(CubicCurveSpec(self.P), w, alpha):
            raise ValueError(f"({w}, {alpha}) is not on the cubic with P={self.P}")
        X, Y = self.scale * alpha, self.scale * w
        if not self.contains(X, Y):
            raise VerificationError(f"image ({X}, {Y}) is off Y^2 = X^3 + {self.k}")
        return X, Y

    def inverse(self, X: rational, Y: rational) -> tuple[Fraction, Fraction]:
        """Map ``(X, Y)`` back to ``(w, alpha)``."""
        X = ensure_rational(X, "X")
        Y = ensure_rational(Y, "Y")
        return Y / self.scale, X / self.scale


def cubic_contains(spec: CubicCurveSpec, w: rational, alpha: rational) -> bool:
    """True iff ``2 * (w**2 - 1) == P * alpha**3`` exactly."""
    w = ensure_rational(w, "w")
    alpha = ensure_rational(alpha, "alpha")
    return 2 * (w**2 - 1) == spec.P * alpha**3


def base_points() -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """The points ``(w, alpha) = (1, 0)`` and ``(-1, 0)``, present on every such cubic."""
    return (Fraction(1), Fraction(0)), (Fraction(-1), Fraction(0))


def is_elliptic(spec: CubicCurveSpec) -> bool:
    """A nondegenerate cubic always carries the base points, so it is elliptic iff ``P != 0``."""
    return spec.P != 0 and all(cubic_contains(spec, w, a) for w, a in base_points())


def mordell_form(spec: CubicCurveSpec) -> MordellForm:
    """
    Change variables to the Mordell model ``Y**2 = X**3 + k``.

    Args:
        spec (CubicCurveSpec): Nondegenerate cubic.

    Returns:
        MordellForm: ``k = (P/2)**2`` with the forward and inverse maps.

    Raises:
        DegenerateCurveError: If ``P = 0``.
    """
    if spec.P == 0:
        raise DegenerateCurveError("P = 0 gives the degenerate curve w^2 = 1")
    return MordellForm(P=spec.P, k=(spec.P / 2) ** 2)


def sextic_coefficients(D: rational) -> list[Fraction]:
    """Coefficients of ``D*(w**2 + 3)**3 + 4*(w - 1)**2*(w + 1)**2`` from ``w**6`` down."""
    D = ensure_rational(D, "D")
    zero = Fraction(0)
    return [D, zero, 9 * D + 4, zero, 27 * D - 8, zero, 27 * D + 4]


def sextic_value(D: rational, w: rational) -> Fraction:
    w = ensure_rational(w, "w")
    return horner(sextic_coefficients(D), w)


def sextic_d(w: rational) -> Fraction:
    """The unique ``D`` for which ``w`` solves the sextic."""
    w = ensure_rational(w, "w")
    return -4 * (w**2 - 1) ** 2 / (w**2 + 3) ** 3


def sextic_rational_roots(D: rational) -> list[Fraction]:
    """
    Rational roots of the sextic ``D*(w**2 + 3)**3 + 4*(w - 1)**2*(1 + w)**2 = 0``.

    Args:
        D (rational): Sextic parameter.

    Returns:
        list[Fraction]: Roots sorted ascending, repeated by multiplicity.
    """
    coeffs = sextic_coefficients(D)
    if coeffs[0] == 0:
        roots = rational_roots(coeffs)
    else:
        # even in w: solve the cubic in u = w**2 and keep the square roots
        roots = []
        for u in rational_roots(coeffs[::2]):
            root = rational_sqrt(u)
            if root is None:
                continue
            roots.extend([root, root] if root == 0 else [-root, root])
        roots.sort()
    for w in roots:
        if sextic_value(D, w) != 0:
            raise VerificationError(f"w={w} is not a root of the sextic with D={D}")
    return roots


def reduced_cubic_roots(w: rational) -> tuple[Fraction, Fraction, Fraction]:
    """
    Roots of ``y**3 + y**2 + D = 0`` where ``D`` makes ``w`` a root of the sextic.

    Args:
        w (rational): Any rational.

    Returns:
        tuple[Fraction, Fraction, Fraction]: ``(-2(w+1), 2(w-1), 1-w**2) / (w**2+3)``.
    """
    w = ensure_rational(w, "w")
    s = w**2 + 3
    return -2 * (w + 1) / s, 2 * (w - 1) / s, (1 - w**2) / s


def rewritten_sextic_holds(w: rational, Q: rational, P: rational) -> bool:
    """True iff ``((w**2 + 3)/Q)**3 == (2*(w**2 - 1)/P)**2``; ``Q`` and ``P`` nonzero."""
    w = ensure_rational(w, "w")
    Q = ensure_rational(Q, "Q")
    P = ensure_rational(P, "P")
    if Q == 0 or P == 0:
        raise ValueError(f"Q and P must be nonzero, got Q={Q}, P={P}")
    return ((w**2 + 3) / Q) ** 3 == (2 * (w**2 - 1) / P) ** 2


def lift_alpha(w: rational, Q: rational, P: rational) -> Fraction:
    """
    The ``alpha`` tying ``w`` to the conic ``w**2 + 3 = Q*alpha**2`` and the
    cubic ``2*(w**2 - 1) = P*alpha**3``.

    Args:
        w (rational): Root of the sextic with ``D = -P**2/Q**3``, not ``±1``.
        Q (rational): Nonzero conic coefficient.
        P (rational): Nonzero cubic coefficient.

    Returns:
        Fraction: ``alpha = 2*Q*(w**2 - 1) / (P*(w**2 + 3))``, checked against both curves.
    """
    w = ensure_rational(w, "w")
    if w in (1, -1):
        raise ExceptionalPointError(f"w={w} is a base point and has no lift")
    Q, P = ensure_rational(Q, "Q"), ensure_rational(P, "P")
    if not rewritten_sextic_holds(w, Q, P):
        raise ValueError(f"w={w} does not solve the sextic for Q={Q}, P={P}")
    alpha = 2 * Q * (w**2 - 1) / (P * (w**2 + 3))
    if w**2 + 3 != Q * alpha**2 or 2 * (w**2 - 1) != P * alpha**3:
        raise VerificationError(f"alpha={alpha} misses a curve for w={w}, Q={Q}, P={P}")
    return alpha


def _branch_data(
    p: ParameterPoint, branch: int, pair: CurvePair | None
) -> tuple[Fraction, Fraction, Fraction]:
    if pair is None:
        pair = curve_pair(p)
    return pair.branch(branch)


def alpha_from_surface_point(
    pt: SurfacePoint, pair: CurvePair | None = None
) -> LiftedPoint:
    """
    Lift a surface point to its ``alpha``.

    Args:
        pt (SurfacePoint): Point on the sextic surface of its branch.
        pair (CurvePair | None, optional): Precomputed curve data at ``(b, c)``.

    Returns:
        LiftedPoint: The point with ``alpha`` on both branch curves.

    Raises:
        ExceptionalPointError: If ``w = ±1``.
        SingularInputError: If the curve data is undefined or ``P`` or ``Q`` is zero.
    """
    if pt.w in (1, -1):
        raise ExceptionalPointError(f"w={pt.w} is excluded from lifting")
    Q, P, D = _branch_data(pt.parameter, pt.branch, pair)
    if Q == 0:
        raise SingularInputError([_Q_FACTORS[pt.branch]], where=f"lift of w={pt.w}")
    if P == 0:
        raise SingularInputError([_P_FACTORS[pt.branch]], where=f"lift of w={pt.w}")
    if sextic_value(D, pt.w) != 0:
        raise ValueError(f"w={pt.w} is not on sextic surface {pt.branch} at b={pt.b}, c={pt.c}")
    return LiftedPoint(point=pt, alpha=lift_alpha(pt.w, Q, P))


def find_surface_points(
    p: ParameterPoint, branch: int, pair: CurvePair | None = None
) -> list[SurfacePoint]:
    """All rational points over ``p`` on the sextic surface of ``branch``, one per distinct ``w``."""
    branch = validate_branch(branch)
    _, _, D = _branch_data(p, branch, pair)
    roots = sorted(set(sextic_rational_roots(D)))
    if roots:
        logger.debug("branch %d at b=%s, c=%s: sextic roots %s", branch, p.b, p.c, roots)
    return [SurfacePoint(p.b, p.c, w, branch) for w in roots]
