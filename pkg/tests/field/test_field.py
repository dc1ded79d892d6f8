"""Tests for FieldSpec and scalar arithmetic in F_q."""

import itertools

import pytest
from pydantic import ValidationError

from ffdistlab.errors import ContractViolation
from ffdistlab.field import (
    FieldSpec,
    f_add,
    f_inv,
    f_mul,
    f_neg,
    f_pow,
    f_sub,
    is_primitive,
    is_square,
    multiplicative_order,
    primitive_element,
    trace,
)


@pytest.mark.unit
class TestFieldSpec:
    """Test construction and validation of field specs."""

    def test_prime_field(self) -> None:
        """Test a prime field has q = p and an empty modulus."""
        spec = FieldSpec(p=7)
        assert spec.q == 7
        assert spec.modulus == ()
        assert spec.is_prime_field

    def test_from_order_picks_smallest_modulus(self) -> None:
        """Test from_order chooses the smallest monic irreducible modulus."""
        assert FieldSpec.from_order(9).modulus == (1, 0, 1)
        assert FieldSpec.from_order(25).modulus == (2, 0, 1)

    def test_from_order_keeps_given_modulus(self) -> None:
        """Test an explicit irreducible modulus is used as given."""
        spec = FieldSpec.from_order(9, (2, 2, 1))
        assert spec.modulus == (2, 2, 1)

    def test_not_a_prime_power(self) -> None:
        """Test q with two prime factors is rejected with a hint."""
        with pytest.raises(ContractViolation, match="Hint"):
            FieldSpec.from_order(15)

    def test_characteristic_two_rejected(self) -> None:
        """Test p = 2 fails validation."""
        with pytest.raises(ValidationError):
            FieldSpec(p=2)

    def test_reducible_modulus_rejected(self) -> None:
        """Test t^2 - 1 over Z_3 is refused."""
        with pytest.raises(ValidationError, match="reducible"):
            FieldSpec(p=3, e=2, modulus=(2, 0, 1))

    def test_wrong_modulus_length(self) -> None:
        """Test a modulus with the wrong number of coefficients is refused."""
        with pytest.raises(ValidationError):
            FieldSpec(p=3, e=2, modulus=(1, 1))

    def test_check_rejects_out_of_range(self, f9: FieldSpec) -> None:
        """Test element indices outside [0, q) raise ContractViolation."""
        with pytest.raises(ContractViolation):
            f9.check(9)
        with pytest.raises(ContractViolation):
            f9.check(-1)

    def test_specs_are_hashable_values(self) -> None:
        """Test equal specs compare and hash equal."""
        assert FieldSpec.from_order(9) == FieldSpec(p=3, e=2, modulus=(1, 0, 1))
        assert len({FieldSpec(p=5), FieldSpec(p=5)}) == 1


@pytest.mark.unit
class TestScalarArithmetic:
    """Test the field operations on element indices."""

    def test_prime_field_operations(self, f5: FieldSpec) -> None:
        """Test arithmetic in F_5 matches arithmetic mod 5."""
        assert f_add(f5, 3, 4) == 2
        assert f_sub(f5, 1, 3) == 3
        assert f_neg(f5, 2) == 3
        assert f_mul(f5, 3, 4) == 2
        assert f_inv(f5, 2) == 3
        assert f_pow(f5, 2, 4) == 1

    def test_extension_multiplication(self, f9: FieldSpec) -> None:
        """Test t * t = -1 and (1 + t)^2 = 2t in F_9."""
        assert f_mul(f9, 3, 3) == 2
        assert f_mul(f9, 4, 4) == 6

    def test_extension_addition_is_digitwise(self, f9: FieldSpec) -> None:
        """Test (2 + t) + (1 + 2t) = 0."""
        assert f_add(f9, 5, 7) == 0

    def test_extension_inverse(self, f9: FieldSpec) -> None:
        """Test 1/t = -t = 2t."""
        assert f_inv(f9, 3) == 6
        for a in range(1, 9):
            assert f_mul(f9, a, f_inv(f9, a)) == 1

    def test_zero_has_no_inverse(self, f9: FieldSpec) -> None:
        """Test inverting zero raises with a hint."""
        with pytest.raises(ContractViolation, match="zero has no inverse"):
            f_inv(f9, 0)

    def test_negative_exponent(self, f5: FieldSpec) -> None:
        """Test a^-1 goes through the inverse."""
        assert f_pow(f5, 2, -1) == 3

    def test_distributive_law(self, f9: FieldSpec) -> None:
        """Test a(b + c) = ab + ac over all of F_9."""
        for a, b, c in itertools.product(range(9), repeat=3):
            assert f_mul(f9, a, f_add(f9, b, c)) == f_add(f9, f_mul(f9, a, b), f_mul(f9, a, c))


@pytest.mark.unit
class TestTraceAndCharacters:
    """Test trace, squares and multiplicative structure."""

    def test_trace_is_identity_on_prime_field(self, f5: FieldSpec) -> None:
        """Test Tr(a) = a when e = 1."""
        assert [trace(f5, a) for a in range(5)] == [0, 1, 2, 3, 4]

    def test_trace_in_extension(self, f9: FieldSpec) -> None:
        """Test Tr(1) = 2 and Tr(t) = 0 in F_9."""
        assert trace(f9, 1) == 2
        assert trace(f9, 3) == 0

    def test_trace_is_additive(self, f9: FieldSpec) -> None:
        """Test Tr(a + b) = Tr(a) + Tr(b) mod p."""
        for a, b in itertools.product(range(9), repeat=2):
            assert trace(f9, f_add(f9, a, b)) == (trace(f9, a) + trace(f9, b)) % 3

    def test_squares(self, f5: FieldSpec, f9: FieldSpec) -> None:
        """Test Euler's criterion; -1 is a square in F_9 but not in F_3."""
        assert [a for a in range(5) if is_square(f5, a)] == [0, 1, 4]
        assert is_square(f9, 2)
        assert not is_square(FieldSpec(p=3), 2)

    def test_multiplicative_order(self, f5: FieldSpec) -> None:
        """Test orders in F_5^*."""
        assert multiplicative_order(f5, 1) == 1
        assert multiplicative_order(f5, 4) == 2
        assert multiplicative_order(f5, 2) == 4

    def test_order_of_zero(self, f5: FieldSpec) -> None:
        """Test zero has no multiplicative order."""
        with pytest.raises(ContractViolation):
            multiplicative_order(f5, 0)

    def test_primitive_elements(self, f5: FieldSpec, f9: FieldSpec) -> None:
        """Test the smallest generators of F_5^*, F_7^* and F_9^*."""
        assert primitive_element(f5) == 2
        assert primitive_element(FieldSpec(p=7)) == 3
        assert primitive_element(f9) == 4
        assert not is_primitive(f9, 3)
        assert not is_primitive(f9, 0)
