from collections.abc import Iterable

from .types import SingularFactor


class SingularInputError(ValueError):
    """A parameter point lies on the zero set of a denominator."""

    def __init__(self, factors: Iterable[SingularFactor], where: str = ""):
        self.factors: tuple[SingularFactor, ...] = tuple(factors)
        names = ", ".join(f.value for f in self.factors)
        prefix = f"{where}: " if where else ""
        super().__init__(f"{prefix}vanishing factor(s): {names}")


class DegenerateParameterError(ValueError):
    pass


class ExceptionalPointError(ValueError):
    pass


class DegenerateCurveError(ValueError):
    pass


class VerificationError(RuntimeError):
    """A computed value failed to satisfy its defining equation."""
