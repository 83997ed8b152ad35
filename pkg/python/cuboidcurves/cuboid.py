"""Ground-truth checks of candidate cuboids against the cuboid and factor equations.

Nothing here goes through the ``(b, c)`` formulas: the factor equations are
evaluated from their weighted sums directly, so this module can judge anything
produced upstream.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, fields
from fractions import Fraction
from itertools import permutations

from .errors import VerificationError
from .parametrization import MultisymmetricProfile
from .polynomial import rational_roots
from .types import WitnessClass
from .utils import ensure_rational, parse_rational, rational

logger = logging.getLogger(__name__)

WITNESS_FIELDS = ("x1", "x2", "x3", "d1", "d2", "d3", "L")

FACTOR_EQUATION_LABELS = (
    "p0",
    "sum p",
    "sum d*p",
    "sum x*p",
    "sum d^2*p",
    "sum x^2*p",
    "sum x*d*p",
    "sum x^2*d^2*p",
)


@dataclass(frozen=True)
class CuboidWitness:
    """Edges ``x1, x2, x3``, face diagonals ``d1, d2, d3`` and space diagonal ``L``."""

    x1: Fraction
    x2: Fraction
    x3: Fraction
    d1: Fraction
    d2: Fraction
    d3: Fraction
    L: Fraction = Fraction(1)

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, ensure_rational(getattr(self, f.name), f.name))

    @classmethod
    def parse(cls, text: str) -> "CuboidWitness":
        """
        Parse ``"x1,x2,x3,d1,d2,d3,L"``; each entry is an exact rational.

        Args:
            text (str): Seven comma-separated rationals.

        Returns:
            CuboidWitness: The parsed witness.
        """
        tokens = text.split(",")
        if len(tokens) != len(WITNESS_FIELDS):
            raise ValueError(
                f"witness needs {len(WITNESS_FIELDS)} comma-separated values "
                f"({','.join(WITNESS_FIELDS)}), got {len(tokens)}"
            )
        return cls(*(parse_rational(t, name) for t, name in zip(tokens, WITNESS_FIELDS)))

    @property
    def edges(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.x1, self.x2, self.x3

    @property
    def diagonals(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.d1, self.d2, self.d3

    def permuted(self, order: Sequence[int]) -> "CuboidWitness":
        """Apply the same permutation to the edges and the face diagonals."""
        x, d = self.edges, self.diagonals
        return CuboidWitness(*(x[i] for i in order), *(d[i] for i in order), self.L)


def eval_cuboid_polynomials(
    wit: CuboidWitness,
) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Values ``(p0, p1, p2, p3)`` of the four cuboid polynomials."""
    x1, x2, x3 = wit.edges
    d1, d2, d3 = wit.diagonals
    p0 = x1**2 + x2**2 + x3**2 - wit.L**2
    p1 = x2**2 + x3**2 - d1**2
    p2 = x3**2 + x1**2 - d2**2
    p3 = x1**2 + x2**2 - d3**2
    return p0, p1, p2, p3


def factor_equation_values(wit: CuboidWitness) -> dict[str, Fraction]:
    """
    Left-hand sides of the eight factor equations.

    Args:
        wit (CuboidWitness): Candidate.

    Returns:
        dict[str, Fraction]: Values keyed by :data:`FACTOR_EQUATION_LABELS`, in that order.
    """
    p0, *p = eval_cuboid_polynomials(wit)
    x, d = wit.edges, wit.diagonals
    weights = (
        (1, 1, 1),
        d,
        x,
        tuple(v**2 for v in d),
        tuple(v**2 for v in x),
        tuple(a * b for a, b in zip(x, d)),
        tuple(a**2 * b**2 for a, b in zip(x, d)),
    )
    values = [p0] + [sum((w * q for w, q in zip(ws, p)), Fraction(0)) for ws in weights]
    return dict(zip(FACTOR_EQUATION_LABELS, values))


def check_factor_equations(wit: CuboidWitness) -> bool:
    return all(v == 0 for v in factor_equation_values(wit).values())


def satisfies_positivity(wit: CuboidWitness) -> bool:
    """All three edges and all three face diagonals strictly positive."""
    return all(v > 0 for v in (*wit.edges, *wit.diagonals))


def positivity_gate(wit: CuboidWitness) -> WitnessClass:
    """
    Classify a witness by the factor equations and the positivity conditions.

    A witness passing both must solve the cuboid equations themselves; that
    conclusion is checked rather than assumed.

    Args:
        wit (CuboidWitness): Candidate.

    Returns:
        WitnessClass: NonSolution if a factor equation fails, FullSolution if
            positivity also holds, FactorOnly otherwise.

    Raises:
        VerificationError: If a positive factor-equation solution misses a cuboid equation.
    """
    if not check_factor_equations(wit):
        return WitnessClass.NonSolution
    if not satisfies_positivity(wit):
        return WitnessClass.FactorOnly
    values = eval_cuboid_polynomials(wit)
    if any(v != 0 for v in values):
        raise VerificationError(
            f"positive solution of the factor equations misses the cuboid equations: p={values}"
        )
    logger.info("full solution found: %s", wit)
    return WitnessClass.FullSolution


def elementary_from_roots(
    x: Sequence[rational], d: Sequence[rational], L: rational = 1
) -> MultisymmetricProfile:
    """
    Elementary multisymmetric values of edges ``x`` and face diagonals ``d``.

    Args:
        x (Sequence[rational]): Three edges.
        d (Sequence[rational]): Three face diagonals.
        L (rational, optional): Carried into the profile unchanged. Defaults to 1.

    Returns:
        MultisymmetricProfile: All nine values.
    """
    if len(x) != 3 or len(d) != 3:
        raise ValueError(f"x and d must have three entries each, got {len(x)} and {len(d)}")
    x1, x2, x3 = (ensure_rational(v, f"x{i + 1}") for i, v in enumerate(x))
    d1, d2, d3 = (ensure_rational(v, f"d{i + 1}") for i, v in enumerate(d))
    return MultisymmetricProfile(
        E10=x1 + x2 + x3,
        E20=x1 * x2 + x2 * x3 + x3 * x1,
        E30=x1 * x2 * x3,
        E01=d1 + d2 + d3,
        E02=d1 * d2 + d2 * d3 + d3 * d1,
        E03=d1 * d2 * d3,
        E21=x1 * x2 * d3 + x2 * x3 * d1 + x3 * x1 * d2,
        E11=x1 * d2 + d1 * x2 + x2 * d3 + d2 * x3 + x3 * d1 + d3 * x1,
        E12=x1 * d2 * d3 + x2 * d3 * d1 + x3 * d1 * d2,
        L=ensure_rational(L, "L"),
    )


def solve_cubic_rational(e1: rational, e2: rational, e3: rational) -> list[Fraction]:
    """Rational roots, with multiplicity and ascending, of ``t**3 - e1*t**2 + e2*t - e3``."""
    e1 = ensure_rational(e1, "e1")
    e2 = ensure_rational(e2, "e2")
    e3 = ensure_rational(e3, "e3")
    return rational_roots([Fraction(1), -e1, e2, -e3])


def check_symmetric_consistency(
    x: Sequence[rational], d: Sequence[rational], profile: MultisymmetricProfile
) -> bool:
    """True iff ``x`` and ``d`` reproduce all nine values of ``profile``."""
    return elementary_from_roots(x, d).e_values() == profile.e_values()


def witnesses_from_profile(profile: MultisymmetricProfile) -> list[CuboidWitness]:
    """
    Reconstruct every rational witness with the given multisymmetric values.

    Edges are the rational roots of ``x**3 - E10 x**2 + E20 x - E30`` and face
    diagonals those of ``d**3 - E01 d**2 + E02 d - E03``; each pairing that
    also reproduces the mixed values ``E21, E11, E12`` is kept.

    Args:
        profile (MultisymmetricProfile): Target values.

    Returns:
        list[CuboidWitness]: Distinct witnesses with edges in ascending order.
    """
    xs = solve_cubic_rational(profile.E10, profile.E20, profile.E30)
    ds = solve_cubic_rational(profile.E01, profile.E02, profile.E03)
    if len(xs) != 3 or len(ds) != 3:
        return []
    found: list[CuboidWitness] = []
    for order in sorted(set(permutations(ds))):
        if check_symmetric_consistency(xs, order, profile):
            wit = CuboidWitness(*xs, *order, profile.L)
            if wit not in found:
                found.append(wit)
    return found
