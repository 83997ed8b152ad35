"""Closed-form parametrization of the cuboid factor equations by two rationals ``(b, c)``.

The nine elementary multisymmetric values, the data of the two curve families
and their singular locus are evaluated exactly from fixed polynomials in
``b`` and ``c``. The quartic inside ``D_1`` and ``P_1`` carries ``c**3``, and
``P_2`` carries that quartic to the power ``-1`` as ``P_1`` does, so that
``D = -P**2 / Q**3`` holds on both branches.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularInputError
from .polynomial import BivariatePolynomial
from .types import FormulaVariant, SingularFactor
from .utils import ensure_rational, rational

logger = logging.getLogger(__name__)

E_DENOMINATOR = BivariatePolynomial(
    "b**2*c**2 + 2*b**2 - 3*b**2*c + c - b*c**2 + 2*b", "E-denominator"
)
LINEAR_1 = BivariatePolynomial("b*c - 1 - b", "bc-1-b")
LINEAR_2 = BivariatePolynomial("b*c - c - 2*b", "bc-c-2b")
_QUARTIC_TEXT = "b**2*c**4 - 6*b**2*c**3 + 13*b**2*c**2 - 12*b**2*c + 4*b**2 + c**2"
QUARTIC = BivariatePolynomial(_QUARTIC_TEXT, "quartic")
# the quartic of the printed E21 denominator, with one extra term
QUARTIC_E21_PRINTED = BivariatePolynomial(f"{_QUARTIC_TEXT} - 4*c**3", "E21-quartic")

_E11_NUM = BivariatePolynomial("-b*(c**2 + 2 - 4*c)", "E11")
_E10_NUM = BivariatePolynomial("-(b**2*c**2 + 2*b**2 - 3*b**2*c - c)", "E10")
_E01_NUM = BivariatePolynomial("-b*(c**2 + 2 - 2*c)", "E01")

_E12_NUM = BivariatePolynomial(
    "16*b**6 + 32*b**5 - 6*c**5*b**2 + 2*c**5*b - 62*b**5*c**6 + 62*b**6*c**6"
    " + 16*b**4 - 180*b**6*c**5 - c**7*b**3 + 18*b**5*c**7 - 12*b**6*c**7"
    " - 2*b**5*c**8 + b**6*c**8 + 248*b**5*c**2 + 248*b**6*c**2 - 96*b**6*c"
    " + 321*b**6*c**4 - 180*b**5*c**3 - 144*b**5*c - 360*b**6*c**3 + b**4*c**8"
    " + 8*b**4*c**6 - 6*b**4*c**7 + 18*b**4*c**5 + 7*b**3*c**6 + 90*b**5*c**5"
    " - 14*b**3*c**5 + 17*b**2*c**4 + 32*b**4*c**2 + 28*b**3*c**3 - 28*b**3*c**2"
    " - 4*b*c**3 + 8*b**3*c - 57*b**4*c**4 + 36*b**4*c**3 - 12*b**2*c**3"
    " - 48*b**4*c - c**4",
    "E12",
)
_E21_NUM = BivariatePolynomial(
    "b/2*(5*c**6*b - 2*c**6*b**2 + 52*c**5*b**2 - 16*c**5*b - 2*c**7*b**2"
    " + 2*b**4*c**8 - 26*b**4*c**7 - 426*b**4*c**5 - 61*b**3*c**6"
    " + 100*b**3*c**5 + 14*c**7*b**3 - c**8*b**3 - 20*b*c**2 - 8*b**2*c**2"
    " - 16*b**2*c - 128*b**2*c**4 - 200*b**3*c**3 + 244*b**3*c**2 + 32*b*c**3"
    " + 768*b**4*c**4 - 852*b**4*c**3 + 568*b**4*c**2 + 104*b**2*c**3"
    " - 208*b**4*c + 8*c**4 + 16*b**3 - 112*b**3*c + 142*b**4*c**6 + 32*b**4"
    " - 2*c**5)",
    "E21",
)
_E03_NUM = BivariatePolynomial(
    "b/2*(b**2*c**4 - 5*b**2*c**3 + 10*b**2*c**2 - 10*b**2*c + 4*b**2 + 2*b*c"
    " + 2*c**2 - b*c**3)"
    "*(2*b**2*c**4 - 12*b**2*c**3 + 26*b**2*c**2 - 24*b**2*c + 8*b**2 - c**4*b"
    " + 3*b*c**3 - 6*b*c + 4*b + c**3 - 2*c**2 + 2*c)",
    "E03",
)
_E30_NUM = BivariatePolynomial(
    "c*b**2*(1 - c)*(c - 2)*(b*c**2 - 4*b*c + 2 + 4*b)"
    "*(2*b*c**2 - c**2 - 4*b*c + 2*b)",
    "E30",
)
_E02_NUM = BivariatePolynomial(
    "(28*b**2*c**2 - 16*b**2*c - 2*c**2 - 4*b**2 - b**2*c**4 + 4*b**3*c**4"
    " - 12*b**3*c**3 + 4*b*c**3 + 24*b**3*c - 8*b*c - 2*b**4*c**4"
    " + 12*b**4*c**3 - 26*b**4*c**2 - 8*b**2*c**3 + 24*b**4*c - 16*b**3"
    " - 8*b**4)/2",
    "E02",
)
_E20_NUM = BivariatePolynomial(
    "b/2*(b*c**2 - 2*c - 2*b)*(2*b*c**2 - c**2 - 6*b*c + 2 + 4*b)", "E20"
)

Q1_INNER = BivariatePolynomial(
    "2*c**2 + 2*b**4*c**4 - 12*b**4*c**3 + 26*b**4*c**2 - 24*b**4*c + 8*b**4"
    " - 6*b**3*c**4 + 18*b**3*c**3 - 36*b**3*c + 24*b**3 + 3*b**2*c**4"
    " + 8*b**2*c**3 - 36*b**2*c**2 + 16*b**2*c + 12*b**2 - 6*b*c**3 + 12*b*c",
    "Q1",
)
Q2_INNER = BivariatePolynomial(
    "6*b**4*c**4 - 36*b**4*c**3 + 78*b**4*c**2 - 72*b**4*c + 24*b**4"
    " - 12*b**3*c**4 + 36*b**3*c**3 - 72*b**3*c + 48*b**3 + 5*b**2*c**4"
    " + 16*b**2*c**3 - 68*b**2*c**2 + 32*b**2*c + 20*b**2 - 12*b*c**3"
    " + 24*b*c + 6*c**2",
    "Q2",
)

# shared by P1 and D1
R1 = BivariatePolynomial(
    "7812*b**4*c**4 - 216*b**2*c**4 - 52*b**2*c**3 + 1764*b**3*c**4"
    " - 1200*b**4*c**3 - 1848*b**4*c**2 + 720*b**4*c - 36*c**4*b"
    " - 1512*b**3*c**3 - 36*c**8*b**3 + 288*b**3*c**2 - 108*c**6*b**2"
    " + 380*c**5*b**2 + 378*c**7*b**3 - 231*c**8*b**4 - 300*c**7*b**4"
    " + 3906*c**6*b**4 - 13*c**7*b**2 - 8904*c**5*b**4 - 882*c**6*b**3"
    " + 18*c**6*b - 1319*b**6*c**8 + 20952*b**5*c**3 - 11952*b**5*c**2"
    " + 2592*b**5*c - 48372*b**6*c**4 + 31620*b**6*c**3 - 10552*b**6*c**2"
    " + 816*b**6*c + 1494*b**5*c**8 - 5238*b**5*c**7 - 4*c**5 + 7905*b**6*c**7"
    " - 24186*b**6*c**6 + 288*b**6 + 43740*b**6*c**5 + 7686*b**5*c**6"
    " + 576*b**7 + 128*b**8 - 15372*b**5*c**4 - 1080*b**7*c**8"
    " - 3546*b**7*c**6 + 51*c**9*b**6 + 400*b**8*c**8 - 162*c**9*b**5"
    " + 8640*b**7*c**2 - 3456*b**7*c + 2808*b**7*c**7 - 1560*b**8*c**7"
    " + 3940*b**8*c**6 + 216*c**9*b**7 - 960*b**8*c - 6240*b**8*c**3"
    " + 9*c**10*b**6 + 7880*b**8*c**4 + 4*c**10*b**8 - 6732*b**8*c**5"
    " + 45*c**9*b**4 + 3200*b**8*c**2 - 11232*b**7*c**3 + 7092*b**7*c**4"
    " - 18*c**10*b**7 - 60*c**9*b**8",
    "R1",
)
# shared by P2 and D2
R2 = BivariatePolynomial(
    "832*b**2*c**2 - 1440*b**2*c**4 - 840*b**2*c**3 + 4788*b**3*c**4"
    " + 396*b*c**3 + 720*b**3*c + 808*b**4*c**4 + 3032*b**4*c**3"
    " - 2576*b**4*c**2 - 96*b**4*c + 448*b**4 - 504*c**4*b - 4176*b**3*c**3"
    " - 9*c**8*b**3 + 72*b**3*c**2 - 720*c**6*b**2 + 2288*c**5*b**2"
    " + 1044*c**7*b**3 - 322*c**8*b**4 + 758*c**7*b**4 + 404*c**6*b**4"
    " - 210*c**7*b**2 - 2464*c**5*b**4 - 2394*c**6*b**3 + 72*c**4"
    " + 252*c**6*b + 3168*b**6*c**8 + 441*c**9*b**5 - 7056*b**5*c"
    " + 57960*b**6*c**4 - 47232*b**6*c**3 + 25344*b**6*c**2 - 8064*b**6*c"
    " - 1809*b**5*c**8 + 14472*b**5*c**2 + 3951*b**5*c**7 - 72*c**5 + 36*c**6"
    " - 11808*b**6*c**7 + 1440*b**5 + 28980*b**6*c**6 - 49032*b**6*c**5"
    " - 4410*b**5*c**6 + 8820*b**5*c**4 - 15804*b**5*c**3 + 1152*b**6"
    " - 504*c**9*b**6 - 45*c**9*b**3 - 6*c**9*b**4 + 104*c**8*b**2"
    " + 36*c**10*b**6 + 14*c**10*b**4 - 45*c**10*b**5 - 99*c**7*b",
    "R2",
)

_FACTOR_POLYNOMIALS: dict[SingularFactor, BivariatePolynomial] = {
    SingularFactor.EDenominator: E_DENOMINATOR,
    SingularFactor.BcMinusOneMinusB: LINEAR_1,
    SingularFactor.BcMinusCMinusTwoB: LINEAR_2,
    SingularFactor.Quartic: QUARTIC,
    SingularFactor.Q1: Q1_INNER,
    SingularFactor.Q2: Q2_INNER,
    SingularFactor.E21Quartic: QUARTIC_E21_PRINTED,
}


@dataclass(frozen=True)
class ParameterPoint:
    """A rational parameter pair ``(b, c)``; ints and "p/q" strings are accepted."""

    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "b", ensure_rational(self.b, "b"))
        object.__setattr__(self, "c", ensure_rational(self.c, "c"))


@dataclass(frozen=True)
class MultisymmetricProfile:
    """Values of the nine elementary multisymmetric polynomials and the diagonal ``L``.

    ``E10, E20, E30`` are the elementary symmetric values of the edges,
    ``E01, E02, E03`` those of the face diagonals, and ``E21, E11, E12`` the
    mixed sums.
    """

    E10: Fraction
    E20: Fraction
    E30: Fraction
    E01: Fraction
    E02: Fraction
    E03: Fraction
    E21: Fraction
    E11: Fraction
    E12: Fraction
    L: Fraction = Fraction(1)

    def e_values(self) -> tuple[Fraction, ...]:
        return (
            self.E10,
            self.E20,
            self.E30,
            self.E01,
            self.E02,
            self.E03,
            self.E21,
            self.E11,
            self.E12,
        )

    def as_dict(self) -> dict[str, Fraction]:
        return {
            "E10": self.E10,
            "E20": self.E20,
            "E30": self.E30,
            "E01": self.E01,
            "E02": self.E02,
            "E03": self.E03,
            "E21": self.E21,
            "E11": self.E11,
            "E12": self.E12,
            "L": self.L,
        }

    def satisfies_master_identity(self) -> bool:
        return check_master_identity(self.E10, self.E01, self.E11, self.L)


@dataclass(frozen=True)
class CurvePair:
    """Data of the two branch curves at one parameter point.

    Branch ``i`` has the conic ``w**2 + 3 = Qi * alpha**2``, the cubic
    ``2 * (w**2 - 1) = Pi * alpha**3`` and the sextic parameter
    ``Di = -Pi**2 / Qi**3``.
    """

    Q1: Fraction
    P1: Fraction
    D1: Fraction
    Q2: Fraction
    P2: Fraction
    D2: Fraction

    def branch(self, branch: int) -> tuple[Fraction, Fraction, Fraction]:
        """Return ``(Q, P, D)`` of branch 1 or 2."""
        if branch == 1:
            return self.Q1, self.P1, self.D1
        elif branch == 2:
            return self.Q2, self.P2, self.D2
        else:
            raise ValueError(f"branch must be 1 or 2, got {branch}")

    def satisfies_structure(self) -> bool:
        return (
            self.D1 * self.Q1**3 + self.P1**2 == 0
            and self.D2 * self.Q2**3 + self.P2**2 == 0
        )


def _coerce_point(p: ParameterPoint) -> ParameterPoint:
    if not isinstance(p, ParameterPoint):
        raise TypeError(f"p must be a ParameterPoint, got {type(p).__name__}")
    return p


def _factor_values(p: ParameterPoint) -> dict[SingularFactor, Fraction]:
    return {f: poly(p.b, p.c) for f, poly in _FACTOR_POLYNOMIALS.items()}


def _e21_quartic(variant: FormulaVariant) -> BivariatePolynomial:
    return QUARTIC_E21_PRINTED if variant is FormulaVariant.Printed else QUARTIC


def singular_locus_check(
    p: ParameterPoint, variant: FormulaVariant = FormulaVariant.Printed
) -> list[SingularFactor]:
    """
    List every denominator factor of the formulas that vanishes at ``p``.

    Args:
        p (ParameterPoint): Parameter point.
        variant (FormulaVariant, optional): Selects whether the extra quartic
            printed inside E21 is a separate factor. Defaults to Printed.

    Returns:
        list[SingularFactor]: Vanishing factors in the fixed order E-denominator,
            bc-1-b, bc-c-2b, quartic, Q1, Q2, E21-quartic. Empty when all
            formulas are defined.
    """
    p = _coerce_point(p)
    vanishing = [f for f, value in _factor_values(p).items() if value == 0]
    if variant is not FormulaVariant.Printed:
        vanishing = [f for f in vanishing if f is not SingularFactor.E21Quartic]
    if vanishing:
        logger.debug("b=%s, c=%s is singular: %s", p.b, p.c, [f.value for f in vanishing])
    return vanishing


def check_master_identity(
    E10: rational, E01: rational, E11: rational, L: rational
) -> bool:
    """True iff ``(2 E11)^2 + (E01^2 + L^2 - E10^2)^2 - 8 E01^2 L^2`` is exactly zero."""
    E10 = ensure_rational(E10, "E10")
    E01 = ensure_rational(E01, "E01")
    E11 = ensure_rational(E11, "E11")
    L = ensure_rational(L, "L")
    return (2 * E11) ** 2 + (E01**2 + L**2 - E10**2) ** 2 - 8 * E01**2 * L**2 == 0


def elementary_profile(
    p: ParameterPoint, variant: FormulaVariant = FormulaVariant.Printed
) -> MultisymmetricProfile:
    """
    Evaluate the nine elementary multisymmetric values at ``p`` with ``L = 1``.

    Args:
        p (ParameterPoint): Parameter point.
        variant (FormulaVariant, optional): Quartic used in the denominator of
            E21. Defaults to Printed.

    Returns:
        MultisymmetricProfile: Exact values; the master identity holds.

    Raises:
        SingularInputError: If one of the E-denominator factors vanishes.
    """
    p = _coerce_point(p)
    b, c = p.b, p.c
    den = E_DENOMINATOR(b, c)
    lin1 = LINEAR_1(b, c)
    lin2 = LINEAR_2(b, c)
    quartic = QUARTIC(b, c)
    quartic21 = _e21_quartic(variant)(b, c)
    vanishing = [
        f
        for f, value in (
            (SingularFactor.EDenominator, den),
            (SingularFactor.BcMinusOneMinusB, lin1),
            (SingularFactor.BcMinusCMinusTwoB, lin2),
            (SingularFactor.Quartic, quartic),
        )
        if value == 0
    ]
    if quartic21 == 0 and variant is FormulaVariant.Printed:
        vanishing.append(SingularFactor.E21Quartic)
    if vanishing:
        raise SingularInputError(vanishing, where=f"elementary profile at b={b}, c={c}")

    lin_sq = lin1**2 * lin2**2
    return MultisymmetricProfile(
        E10=_E10_NUM(b, c) / den,
        E20=_E20_NUM(b, c) / lin_sq,
        E30=_E30_NUM(b, c) / (quartic * lin_sq),
        E01=_E01_NUM(b, c) / den,
        E02=_E02_NUM(b, c) / lin_sq,
        E03=_E03_NUM(b, c) / (quartic * lin_sq),
        E21=_E21_NUM(b, c) / (quartic21 * lin_sq),
        E11=_E11_NUM(b, c) / den,
        E12=_E12_NUM(b, c) / (quartic * lin_sq),
        L=Fraction(1),
    )


def curve_pair(p: ParameterPoint) -> CurvePair:
    """
    Evaluate ``Q``, ``P`` and ``D`` of both branch curves at ``p``.

    ``D`` is derived through ``D = -P**2 / Q**3``; :func:`d_parameters`
    evaluates the same numbers from their own closed forms.

    Args:
        p (ParameterPoint): Parameter point.

    Returns:
        CurvePair: Exact curve data.

    Raises:
        SingularInputError: If the quartic, Q1 or Q2 vanishes.
    """
    p = _coerce_point(p)
    b, c = p.b, p.c
    quartic = QUARTIC(b, c)
    q1 = Fraction(3, 2) * Q1_INNER(b, c)
    q2 = Fraction(3, 2) * Q2_INNER(b, c)
    vanishing = [
        f
        for f, value in (
            (SingularFactor.Quartic, quartic),
            (SingularFactor.Q1, q1),
            (SingularFactor.Q2, q2),
        )
        if value == 0
    ]
    if vanishing:
        raise SingularInputError(vanishing, where=f"curve pair at b={b}, c={c}")
    p1 = R1(b, c) / (2 * quartic)
    p2 = b * R2(b, c) / (2 * quartic)
    return CurvePair(
        Q1=q1,
        P1=p1,
        D1=-(p1**2) / q1**3,
        Q2=q2,
        P2=p2,
        D2=-(p2**2) / q2**3,
    )


def d_parameters(p: ParameterPoint) -> tuple[Fraction, Fraction]:
    """
    Evaluate ``(D1, D2)`` of the two sextic surfaces from their closed forms.

    Args:
        p (ParameterPoint): Parameter point.

    Returns:
        tuple[Fraction, Fraction]: The sextic parameters of branch 1 and 2.

    Raises:
        SingularInputError: If the quartic, Q1 or Q2 vanishes.
    """
    p = _coerce_point(p)
    b, c = p.b, p.c
    quartic = QUARTIC(b, c)
    inner1 = Q1_INNER(b, c)
    inner2 = Q2_INNER(b, c)
    vanishing = [
        f
        for f, value in (
            (SingularFactor.Quartic, quartic),
            (SingularFactor.Q1, inner1),
            (SingularFactor.Q2, inner2),
        )
        if value == 0
    ]
    if vanishing:
        raise SingularInputError(vanishing, where=f"D-parameters at b={b}, c={c}")
    d1 = Fraction(-2, 27) * R1(b, c) ** 2 / (inner1**3 * quartic**2)
    d2 = Fraction(-2, 27) * b**2 * R2(b, c) ** 2 / (inner2**3 * quartic**2)
    return d1, d2
