from fractions import Fraction
from typing import Union

rational = Union[Fraction, int, str]


def parse_rational(text: str, name: str) -> Fraction:
    """Parse an exact rational written as "p", "p/q" or a finite decimal."""
    if not isinstance(text, str):
        raise TypeError(f"{name} must be a string, got {type(text).__name__}")
    token = text.strip()
    if not token:
        raise ValueError(f"{name} is empty")
    try:
        return Fraction(token)
    except ZeroDivisionError as e:
        raise ValueError(f"{name} has a zero denominator: {text!r}") from e
    except ValueError as e:
        raise ValueError(f"{name} is not an exact rational: {text!r}") from e


def ensure_rational(value: rational, name: str) -> Fraction:
    """Ensure the input value is an exact rational, converting ints and strings."""
    if isinstance(value, bool):
        raise TypeError(f"{name} must be a rational number, got bool")
    if isinstance(value, Fraction):
        return value
    elif isinstance(value, int):
        return Fraction(value)
    elif isinstance(value, str):
        return parse_rational(value, name)
    else:
        # floats are rejected: every formula here is an exact identity
        raise TypeError(
            f"{name} must be a Fraction, int or str, got {type(value).__name__}"
        )


def ensure_nonzero_rational(value: rational, name: str) -> Fraction:
    q = ensure_rational(value, name)
    if q == 0:
        raise ValueError(f"{name} must be nonzero")
    return q


def format_rational(value: Fraction) -> str:
    """Serialize an exact rational as "p/q" (or "p" for integers)."""
    return str(value)


def validate_integer(val: int, name: str) -> int:
    """Validate that val is an integer."""
    if isinstance(val, bool) or not isinstance(val, int):
        raise TypeError(f"{name} must be an integer, got {type(val).__name__}")
    return val


def validate_nonzero_integer(val: int, name: str) -> int:
    val = validate_integer(val, name)
    if val == 0:
        raise ValueError(f"{name} must be nonzero")
    return val


def validate_positive_integer(val: int, name: str) -> int:
    """Validate that val is a positive integer."""
    val = validate_integer(val, name)
    if val <= 0:
        raise ValueError(f"{name} must be positive, got {val}")
    return val


def validate_branch(branch: int) -> int:
    branch = validate_integer(branch, "branch")
    if branch not in (1, 2):
        raise ValueError(f"branch must be 1 or 2, got {branch}")
    return branch
