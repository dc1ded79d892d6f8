"""
Field specification - the parameters of F_q for odd prime powers q = p^e.

Elements are encoded as integer indices in [0, q): the index is the
little-endian base-p digit vector of the coefficients of a polynomial in t
of degree < e, reduced by the monic irreducible `modulus`.
"""

import itertools
import logging
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import factorint, isprime

from ffdistlab.errors import ContractViolation, with_hint

logger = logging.getLogger(__name__)


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of `a` divided by the monic polynomial `m` over Z_p (little-endian)."""
    rem = _trim([c % p for c in a])
    deg_m = len(m) - 1
    while len(rem) - 1 >= deg_m:
        lead = rem[-1]
        shift = len(rem) - 1 - deg_m
        for i, c in enumerate(m):
            rem[shift + i] = (rem[shift + i] - lead * c) % p
        _trim(rem)
    return rem


def poly_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    """Product of `a` and `b` reduced by `m` over Z_p."""
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            prod[i + j] += x * y
    return poly_mod(prod, m, p)


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division of a monic polynomial by every monic polynomial of degree <= e/2."""
    e = len(modulus) - 1
    target = list(modulus)
    for degree in range(1, e // 2 + 1):
        for lower in itertools.product(range(p), repeat=degree):
            divisor = [*lower, 1]
            if not poly_mod(target, divisor, p):
                return False
    return True


class FieldSpec(BaseModel):
    """
    Parameters of the finite field F_q, q = p^e with p an odd prime.

    Usage:
        >>> F9 = FieldSpec(p=3, e=2, modulus=(1, 0, 1))  # t^2 + 1
        >>> F9.q
        9
        >>> FieldSpec.from_order(25).modulus
        (2, 0, 1)

    Attributes:
        p: Odd prime characteristic.
        e: Extension degree (>= 1).
        modulus: e+1 little-endian coefficients of a monic irreducible
            polynomial over Z_p. Empty when e == 1.
    """

    model_config = ConfigDict(frozen=True)

    p: int = Field(ge=3)
    e: int = Field(default=1, ge=1)
    modulus: tuple[int, ...] = ()

    @model_validator(mode="before")
    @classmethod
    def _normalize_modulus(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("e", 1) == 1:
            data = {**data, "modulus": ()}
        return data

    @model_validator(mode="after")
    def _check_field(self) -> "FieldSpec":
        if not isprime(self.p) or self.p == 2:
            raise ValueError(
                with_hint(
                    f"p = {self.p} is not an odd prime.",
                    "Characteristic 2 is not supported; pick q = p^e with p odd.",
                )
            )
        if self.e > 1:
            if len(self.modulus) != self.e + 1:
                raise ValueError(
                    with_hint(
                        f"modulus must have e+1 = {self.e + 1} coefficients, got {len(self.modulus)}.",
                        "Coefficients are little-endian: t^2 + 1 is (1, 0, 1).",
                    )
                )
            if any(not 0 <= c < self.p for c in self.modulus) or self.modulus[-1] != 1:
                raise ValueError(f"modulus {self.modulus} is not monic with coefficients in [0, {self.p}).")
            if not is_irreducible(self.modulus, self.p):
                raise ValueError(
                    with_hint(
                        f"modulus {self.modulus} is reducible over Z_{self.p}.",
                        "Omit the modulus to use the smallest irreducible one.",
                    )
                )
        return self

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    @classmethod
    def from_order(cls, q: int, modulus: tuple[int, ...] | None = None) -> "FieldSpec":
        """Build the spec of F_q, choosing the smallest irreducible modulus if none is given."""
        factors = factorint(q)
        if len(factors) != 1:
            raise ContractViolation(
                with_hint(f"q = {q} is not a prime power.", "Use q = p^e with p an odd prime.")
            )
        ((p, e),) = factors.items()
        if e == 1:
            return cls(p=p, e=1)
        if modulus is None:
            modulus = smallest_irreducible(p, e)
            logger.debug("Using modulus %s for F_%d", modulus, q)
        return cls(p=p, e=e, modulus=tuple(modulus))

    def check(self, a: int) -> int:
        """Validate an element index."""
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ContractViolation(f"{a!r} is not an element index of F_{self.q} (expected 0 <= a < {self.q}).")
        return a

    def digits(self, a: int) -> list[int]:
        """Little-endian base-p coefficient vector of `a`."""
        return [(a // self.p**i) % self.p for i in range(self.e)]

    def from_digits(self, digits: list[int]) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(digits))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"FieldSpec(F_{self.p})"
        return f"FieldSpec(F_{self.q}, modulus={self.modulus})"


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """The lexicographically smallest (by index) monic irreducible polynomial of degree e."""
    for lower in itertools.product(range(p), repeat=e):
        candidate = (*reversed(lower), 1)
        if candidate[0] != 0 and is_irreducible(candidate, p):
            return candidate
    raise ContractViolation(f"no irreducible polynomial of degree {e} over Z_{p}")
