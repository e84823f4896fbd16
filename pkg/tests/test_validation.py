"""Tests for validation utilities."""

import pytest

from f_edge_color.utils.validation import (
    ValidationError,
    validate_choice,
    validate_non_negative_int,
    validate_optional_budget,
    validate_positive_int,
)


class TestIntegers:
    """Tests for the integer validators."""

    def test_positive(self):
        """Test positive integers pass through."""
        assert validate_positive_int(3, "jobs") == 3

    @pytest.mark.parametrize("value", [0, -2, 1.5, "3", True, None])
    def test_positive_rejects(self, value):
        """Test zero, negatives, floats, strings and booleans are rejected."""
        with pytest.raises(ValidationError, match="jobs"):
            validate_positive_int(value, "jobs")

    def test_min_value(self):
        """Test a custom lower bound."""
        assert validate_positive_int(5, "k", min_value=5) == 5
        with pytest.raises(ValidationError, match=">= 6"):
            validate_positive_int(5, "k", min_value=6)

    def test_non_negative(self):
        """Test zero is allowed but negatives are not."""
        assert validate_non_negative_int(0, "limit") == 0
        with pytest.raises(ValidationError):
            validate_non_negative_int(-1, "limit")

    def test_optional_budget(self):
        """Test None means unlimited and zero is rejected."""
        assert validate_optional_budget(None, "budget") is None
        assert validate_optional_budget(10, "budget") == 10
        with pytest.raises(ValidationError):
            validate_optional_budget(0, "budget")


class TestChoice:
    """Tests for validate_choice."""

    def test_case_insensitive(self):
        """Test values are matched and returned lower-cased."""
        assert validate_choice("JSON", "format", ("text", "json")) == "json"

    def test_unknown(self):
        """Test the error lists the choices."""
        with pytest.raises(ValidationError, match="text, json"):
            validate_choice("xml", "format", ("text", "json"))

    def test_not_a_string(self):
        """Test non-strings are rejected."""
        with pytest.raises(ValidationError, match="string"):
            validate_choice(1, "format", ("text",))
