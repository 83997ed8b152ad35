from fractions import Fraction
from itertools import permutations

import pytest

from cuboidcurves import cuboid
from cuboidcurves.cuboid import (
    FACTOR_EQUATION_LABELS,
    CuboidWitness,
    check_factor_equations,
    check_symmetric_consistency,
    elementary_from_roots,
    eval_cuboid_polynomials,
    factor_equation_values,
    positivity_gate,
    satisfies_positivity,
    solve_cubic_rational,
    witnesses_from_profile,
)
from cuboidcurves.errors import VerificationError
from cuboidcurves.sampling import random_rationals
from cuboidcurves.types import WitnessClass


def test_parse_witness():
    wit = CuboidWitness.parse("3/5, 4/5, 0, 4/5, 3/5, 1, 1")
    assert wit.edges == (Fraction(3, 5), Fraction(4, 5), 0)
    assert wit.diagonals == (Fraction(4, 5), Fraction(3, 5), 1)
    assert wit.L == 1


@pytest.mark.parametrize(
    "text, message",
    [
        ("1,2,3", "7 comma-separated"),
        ("1/0,0,0,0,1,1,1", "x1"),
        ("1,0,0,0,1,1,abc", "L"),
    ],
)
def test_parse_witness_errors(text, message):
    with pytest.raises(ValueError, match=message):
        CuboidWitness.parse(text)


def test_eval_cuboid_polynomials():
    wit = CuboidWitness(1, 0, 0, 0, 1, 1, 1)
    assert eval_cuboid_polynomials(wit) == (0, 0, 0, 0)
    wit = CuboidWitness(1, 1, 1, 1, 1, 1, 1)
    assert eval_cuboid_polynomials(wit) == (2, 1, 1, 1)


def test_factor_equation_values_labels():
    values = factor_equation_values(CuboidWitness(1, 1, 1, 1, 1, 1, 1))
    assert tuple(values) == FACTOR_EQUATION_LABELS
    assert values["p0"] == 2
    assert values["sum p"] == 3
    assert values["sum x^2*d^2*p"] == 3


@pytest.mark.parametrize(
    "wit, expected",
    [
        (CuboidWitness(1, 0, 0, 0, 1, 1, 1), WitnessClass.FactorOnly),
        (CuboidWitness(1, 1, 1, 1, 1, 1, 1), WitnessClass.NonSolution),
        (CuboidWitness(0, 0, 0, 0, 0, 0, 0), WitnessClass.FactorOnly),
    ],
)
def test_positivity_gate_examples(wit, expected):
    assert positivity_gate(wit) is expected


def test_pythagorean_witnesses_are_factor_only(pythagorean_witnesses):
    for wit in pythagorean_witnesses:
        assert eval_cuboid_polynomials(wit) == (0, 0, 0, 0)
        assert check_factor_equations(wit)
        assert not satisfies_positivity(wit)
        assert positivity_gate(wit) is WitnessClass.FactorOnly


def test_perturbed_pythagorean_witnesses_fail(pythagorean_witnesses):
    deltas = [abs(v) + Fraction(1, 1000) for v in random_rationals(20, height=50, seed=71)]
    for wit in pythagorean_witnesses:
        for i, delta in enumerate(deltas):
            values = [*wit.edges, *wit.diagonals, wit.L]
            values[i % 7] += delta
            perturbed = CuboidWitness(*values)
            assert not check_factor_equations(perturbed)
            assert positivity_gate(perturbed) is WitnessClass.NonSolution


def test_positivity_gate_checks_its_conclusion(monkeypatch):
    monkeypatch.setattr(cuboid, "check_factor_equations", lambda wit: True)
    with pytest.raises(VerificationError):
        positivity_gate(CuboidWitness(1, 1, 1, 1, 1, 1, 1))


def test_positivity_gate_full_solution(monkeypatch):
    monkeypatch.setattr(cuboid, "check_factor_equations", lambda wit: True)
    monkeypatch.setattr(cuboid, "eval_cuboid_polynomials", lambda wit: (0, 0, 0, 0))
    assert positivity_gate(CuboidWitness(1, 1, 1, 1, 1, 1, 1)) is WitnessClass.FullSolution


def test_elementary_from_roots_examples():
    profile = elementary_from_roots((1, 2, 3), (0, 0, 0))
    assert (profile.E10, profile.E20, profile.E30) == (6, 11, 6)
    assert (profile.E01, profile.E02, profile.E03) == (0, 0, 0)
    assert (profile.E21, profile.E11, profile.E12) == (0, 0, 0)
    profile = elementary_from_roots((1, 1, 1), (1, 1, 1))
    assert profile.e_values() == (3, 3, 1, 3, 3, 1, 3, 6, 3)
    with pytest.raises(ValueError):
        elementary_from_roots((1, 2), (1, 2, 3))


@pytest.mark.parametrize(
    "e, roots",
    [
        ((6, 11, 6), [1, 2, 3]),
        ((0, 0, 0), [0, 0, 0]),
        ((0, 1, 0), [0]),
        ((Fraction(3, 2), Fraction(1, 2), 0), [0, Fraction(1, 2), 1]),
    ],
)
def test_solve_cubic_rational(e, roots):
    assert solve_cubic_rational(*e) == roots


def test_vieta_round_trip():
    values = random_rationals(60, height=30, seed=73)
    for i in range(0, 60, 6):
        x, d = values[i : i + 3], values[i + 3 : i + 6]
        profile = elementary_from_roots(x, d)
        assert solve_cubic_rational(profile.E10, profile.E20, profile.E30) == sorted(x)
        assert solve_cubic_rational(profile.E01, profile.E02, profile.E03) == sorted(d)
        assert check_symmetric_consistency(x, d, profile)


def test_profile_is_invariant_under_simultaneous_permutation():
    wit = CuboidWitness(1, 2, 3, 4, 5, 6, 1)
    reference = elementary_from_roots(wit.edges, wit.diagonals)
    for order in permutations(range(3)):
        moved = wit.permuted(order)
        assert elementary_from_roots(moved.edges, moved.diagonals) == reference
        assert positivity_gate(moved) is positivity_gate(wit)


def test_mixed_values_see_the_pairing():
    profile = elementary_from_roots((1, 2, 3), (4, 5, 6))
    assert not check_symmetric_consistency((1, 2, 3), (5, 4, 6), profile)


def test_witnesses_from_profile():
    profile = elementary_from_roots((3, 1, 2), (6, 4, 5))
    assert CuboidWitness(1, 2, 3, 4, 5, 6, 1) in witnesses_from_profile(profile)
    irrational = elementary_from_roots((1, 2, 3), (4, 5, 6))
    irrational = type(irrational)(**(irrational.as_dict() | {"E20": Fraction(1)}))
    assert witnesses_from_profile(irrational) == []


def test_witnesses_from_pythagorean_profile(pythagorean_witnesses):
    for wit in pythagorean_witnesses[:5]:
        profile = elementary_from_roots(wit.edges, wit.diagonals, wit.L)
        found = witnesses_from_profile(profile)
        assert found
        for candidate in found:
            assert check_symmetric_consistency(candidate.edges, candidate.diagonals, profile)
            assert positivity_gate(candidate) is not WitnessClass.FullSolution
