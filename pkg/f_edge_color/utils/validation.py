"""Checks for configuration values and command-line flags.

Every check returns the (possibly normalized) value or raises
:class:`ValidationError` naming the offending setting.
"""

from typing import Optional, Sequence


class ValidationError(Exception):
    """A setting or flag has an unusable value."""

    pass


def validate_positive_int(value: int, name: str, min_value: int = 1) -> int:
    """Require an int (not a bool) of at least ``min_value``.

    Args:
        value: Value to check.
        name: Setting name used in the message.
        min_value: Smallest accepted value.
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{name} must be an integer, got {type(value).__name__}")
    if value < min_value:
        raise ValidationError(f"{name} must be >= {min_value}, got {value}")
    return value


def validate_non_negative_int(value: int, name: str) -> int:
    """Require an int >= 0."""
    return validate_positive_int(value, name, min_value=0)


def validate_optional_budget(value: Optional[int], name: str) -> Optional[int]:
    """A node budget: a positive int, or None for unlimited."""
    return None if value is None else validate_positive_int(value, name)


def validate_choice(value: str, name: str, choices: Sequence[str]) -> str:
    """Match ``value`` against lower-case ``choices`` ignoring case; returns it lower-cased."""
    if not isinstance(value, str):
        raise ValidationError(f"{name} must be a string, got {type(value).__name__}")
    lowered = value.lower()
    if lowered not in choices:
        raise ValidationError(f"{name} must be one of {', '.join(choices)}, got {value!r}")
    return lowered
