"""Tests for error messages with hints."""

import pytest
from pydantic import ValidationError

from ffdistlab.errors import (
    ContractViolation,
    FFDistLabError,
    HypothesisViolation,
    IdentityViolation,
    NumericalFailure,
    ResourceBudgetExceeded,
    UnsupportedOperation,
    with_hint,
)
from ffdistlab.field import FieldSpec
from ffdistlab.geometry import AmbientSpec, PointSet, parse_polynomial


class TestErrorMessages:
    """Test that errors include helpful hints."""

    def test_with_hint_layout(self) -> None:
        """Test the hint sits in its own indented paragraph."""
        assert with_hint("bad input.", "Try again.") == "bad input.\n\n  Hint: Try again."
        assert with_hint("bad input.") == "bad input."

    def test_even_characteristic_hint(self) -> None:
        """Test characteristic 2 explains what is supported."""
        with pytest.raises(ValidationError, match="Characteristic 2 is not supported"):
            FieldSpec(p=2)

    def test_reducible_modulus_hint(self) -> None:
        """Test a reducible modulus suggests omitting it."""
        with pytest.raises(ValidationError, match="Omit the modulus"):
            FieldSpec(p=3, e=2, modulus=(2, 0, 1))

    def test_budget_hint_names_the_variable(self) -> None:
        """Test the budget error tells how to raise the limit."""
        error = ResourceBudgetExceeded("rank space", 100, 10)
        assert "FFDISTLAB_BUDGET" in str(error)
        assert str(error).startswith("rank space has size 100, above the budget of 10.")

    def test_hypothesis_names_target_and_hypothesis(self) -> None:
        """Test a hypothesis error says which statement needs what."""
        error = HypothesisViolation("sphere-even-k3", "an even dimension d >= 4", "got d = 3.")
        assert str(error) == "'sphere-even-k3' requires an even dimension d >= 4.\n\n  Hint: got d = 3."

    def test_identity_violation_keeps_witness(self) -> None:
        """Test the witness is attached and shown."""
        error = IdentityViolation("parseval", {"residue": 0.5})
        assert error.witness == {"residue": 0.5}
        assert "parseval" in str(error)

    def test_parse_error_hint(self, plane3: AmbientSpec) -> None:
        """Test polynomial syntax errors carry a hint."""
        with pytest.raises(ContractViolation, match="Hint"):
            parse_polynomial("x1 ^^ 2", plane3)

    def test_out_of_range_rank_hint(self, plane3: AmbientSpec) -> None:
        """Test rank errors carry a hint."""
        with pytest.raises(ContractViolation, match="Hint"):
            PointSet.from_ranks(plane3, [-1])


class TestErrorHierarchy:
    """Test errors are catchable as library errors and as builtins."""

    @pytest.mark.parametrize(
        ("error", "builtin", "exit_code"),
        [
            (ContractViolation("x"), ValueError, 2),
            (UnsupportedOperation("x"), NotImplementedError, 2),
            (ResourceBudgetExceeded("x", 2, 1), MemoryError, 3),
            (NumericalFailure("x"), ArithmeticError, 1),
            (HypothesisViolation("t", "h"), ValueError, 2),
            (IdentityViolation("i", {}), AssertionError, 1),
        ],
    )
    def test_bases_and_exit_codes(self, error: FFDistLabError, builtin: type, exit_code: int) -> None:
        """Test each error's builtin base and CLI exit code."""
        assert isinstance(error, FFDistLabError)
        assert isinstance(error, builtin)
        assert error.exit_code == exit_code
