"""
Size thresholds above which |Delta_k(A)| >> q, as exact rational exponents of q.

Each theorem has a stable identifier. `threshold_exponent` checks the
hypotheses the statement needs and returns the exponent theta such that
|A| >> q^theta suffices.
"""

import sys
from collections.abc import Callable
from fractions import Fraction

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ffdistlab.errors import ContractViolation, HypothesisViolation, with_hint
from ffdistlab.types import Rational


class TheoremParams(BaseModel):
    """
    Parameters shared by the threshold formulas.

    Attributes:
        d: Ambient dimension.
        n: Dimension of the variety (needed by the dimension based results).
        k: Number of summands in Delta_k.
        alpha: Exponent of t_V = q^alpha, in [0, (d+1)/2].
        c: Constant in (0, 1] of the energy dichotomy.
        beta: Exponent in [4^-n, 2^(1-n)]; defaults to 4^-n.
        q: Field order, only needed for the congruence q = 1 mod 4.
    """

    model_config = ConfigDict(frozen=True)

    d: int = Field(ge=1)
    n: int | None = Field(default=None, ge=0)
    k: int = Field(default=3, ge=2)
    alpha: Rational = Fraction(0)
    c: Rational = Fraction(1)
    beta: Rational | None = None
    q: int | None = None

    @model_validator(mode="after")
    def _check_ranges(self) -> Self:
        if not 0 < self.c <= 1:
            raise ValueError(f"c must lie in (0, 1], got {self.c}.")
        if not 0 <= self.alpha <= Fraction(self.d + 1, 2):
            raise ValueError(f"alpha must lie in [0, (d+1)/2] = [0, {Fraction(self.d + 1, 2)}], got {self.alpha}.")
        if self.beta is not None:
            if self.n is None:
                raise ValueError("beta is tied to n; set n as well.")
            low, high = Fraction(1, 4**self.n), Fraction(2, 2**self.n)
            if not low <= self.beta <= high:
                raise ValueError(f"beta must lie in [{low}, {high}] for n = {self.n}, got {self.beta}.")
        return self

    @property
    def effective_beta(self) -> Fraction:
        if self.beta is not None:
            return self.beta
        if self.n is None:
            raise HypothesisViolation("beta", "the variety dimension n")
        return Fraction(1, 4**self.n)

    @property
    def gamma(self) -> Fraction:
        """(2^{n+1} - n - 5)^{-1}, defined for n >= 2."""
        if self.n is None or self.n < 2:
            raise HypothesisViolation("gamma", "n >= 2", f"got n = {self.n}.")
        return Fraction(1, 2 ** (self.n + 1) - self.n - 5)

    @property
    def epsilon(self) -> Fraction:
        """(d+1) c beta / (2 (4 + c beta))."""
        cb = self.c * self.effective_beta
        return Fraction(self.d + 1) * cb / (2 * (4 + cb))


class TheoremInfo(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    summary: str
    k: int | None = None


# =============================================================================
# Hypotheses
# =============================================================================


def _require(theorem_id: str, condition: bool, hypothesis: str, hint: str | None = None) -> None:
    if not condition:
        raise HypothesisViolation(theorem_id, hypothesis, hint)


def _require_large_dimension(theorem_id: str, params: TheoremParams) -> None:
    _require(theorem_id, params.d >= 2, "d >= 2")
    _require(
        theorem_id,
        params.n is not None and 2 * params.n >= params.d + 1,
        "a variety of dimension n >= (d+1)/2",
        f"got n = {params.n}, d = {params.d}.",
    )


def _require_odd_sphere_dimension(theorem_id: str, params: TheoremParams) -> None:
    d = params.d
    _require(theorem_id, d >= 3 and d % 2 == 1, "an odd dimension d >= 3", f"got d = {d}.")
    if d % 4 == 1:
        _require(theorem_id, d >= 5, "d = 4l + 1 with l >= 1")
    else:
        _require(
            theorem_id,
            params.q is not None and params.q % 4 == 1,
            "q = 1 mod 4 when d = 4l - 1",
            "Pass q so the congruence can be checked.",
        )


def _require_k(theorem_id: str, params: TheoremParams, low: int) -> None:
    _require(theorem_id, params.k >= low, f"k >= {low}", f"got k = {params.k}.")


# =============================================================================
# Formulas
# =============================================================================


def _two_point_sphere(params: TheoremParams) -> Fraction:
    return Fraction(params.d, 2)


def _two_point_sphere_odd(params: TheoremParams) -> Fraction:
    _require("two-point-sphere-odd", params.d % 2 == 1, "an odd dimension d")
    return Fraction(params.d + 1, 2)


def _regular_baseline(params: TheoremParams) -> Fraction:
    _require_k("regular-baseline", params, 3)
    return Fraction(params.d - 1, 2) + Fraction(1, params.k - 1)


def _dimension_epsilon(params: TheoremParams) -> Fraction:
    _require_large_dimension("dimension-epsilon", params)
    _require_k("dimension-epsilon", params, 3)
    return Fraction(params.d + 1, 2) - params.epsilon


def _affine(theorem_id: str, params: TheoremParams, shift: int) -> Fraction:
    _require_large_dimension(theorem_id, params)
    gamma = params.gamma
    d1 = params.d + 1
    return Fraction(d1, 2) - gamma * (d1 - 2 * params.alpha) / (2 * (shift + gamma))


def _affine_k3(params: TheoremParams) -> Fraction:
    return _affine("affine-k3", params, 2)


def _affine_k4(params: TheoremParams) -> Fraction:
    return _affine("affine-k4", params, 1)


def _sphere_even(theorem_id: str, params: TheoremParams) -> None:
    _require(theorem_id, params.d >= 4 and params.d % 2 == 0, "an even dimension d >= 4", f"got d = {params.d}.")


def _sphere_even_k(params: TheoremParams) -> Fraction:
    _sphere_even("sphere-even-k", params)
    _require_k("sphere-even-k", params, 4)
    return Fraction(params.d - 1, 2) + Fraction(1, 4 * (params.k - 2))


def _sphere_even_k3(params: TheoremParams) -> Fraction:
    _sphere_even("sphere-even-k3", params)
    return Fraction(params.d, 2) - Fraction(1, 4)


def _sphere_odd_k(params: TheoremParams) -> Fraction:
    _require_odd_sphere_dimension("sphere-odd-k", params)
    _require_k("sphere-odd-k", params, 4)
    return Fraction(params.d - 1, 2) + Fraction(1, 4 * params.k - 6)


def _sphere_odd_k3(params: TheoremParams) -> Fraction:
    _require_odd_sphere_dimension("sphere-odd-k3", params)
    return Fraction(params.d, 2) - Fraction(1, 3)


_FORMULAS: dict[str, Callable[[TheoremParams], Fraction]] = {
    "two-point-sphere": _two_point_sphere,
    "two-point-sphere-odd": _two_point_sphere_odd,
    "regular-baseline": _regular_baseline,
    "dimension-epsilon": _dimension_epsilon,
    "affine-k3": _affine_k3,
    "affine-k4": _affine_k4,
    "sphere-even-k": _sphere_even_k,
    "sphere-even-k3": _sphere_even_k3,
    "sphere-odd-k": _sphere_odd_k,
    "sphere-odd-k3": _sphere_odd_k3,
}

THEOREMS: dict[str, TheoremInfo] = {
    info.id: info
    for info in (
        TheoremInfo(id="two-point-sphere", summary="A in S_1: |Delta_2(A)| >> q once |A| >> q^(d/2)", k=2),
        TheoremInfo(id="two-point-sphere-odd", summary="A in S_1, d odd: Delta_2(A) = F_q once |A| >> q^((d+1)/2)", k=2),
        TheoremInfo(id="regular-baseline", summary="regular V, k >= 3: Delta_k(A) covers F_q^* once |A| >> q^((d-1)/2 + 1/(k-1))"),
        TheoremInfo(id="dimension-epsilon", summary="dim V >= (d+1)/2: |Delta_k(A)| >> q once |A| >> q^((d+1)/2 - eps)"),
        TheoremInfo(id="affine-k3", summary="dim V >= (d+1)/2, t_V = q^alpha: |Delta_3(A)| >> q", k=3),
        TheoremInfo(id="affine-k4", summary="dim V >= (d+1)/2, t_V = q^alpha: |Delta_4(A)| >> q", k=4),
        TheoremInfo(id="sphere-even-k", summary="S_j, j != 0, d >= 4 even, k > 3: |Delta_k(A)| >> q"),
        TheoremInfo(id="sphere-even-k3", summary="S_j, j != 0, d >= 4 even: |Delta_3(A)| >> q", k=3),
        TheoremInfo(id="sphere-odd-k", summary="S_j, j primitive, d odd, k > 3: |Delta_k(A)| >> q"),
        TheoremInfo(id="sphere-odd-k3", summary="S_j, j primitive, d odd: |Delta_3(A)| >> q", k=3),
    )
}


def threshold_exponent(theorem_id: str, params: TheoremParams) -> Fraction:
    """
    Exact exponent theta of the size threshold |A| >> q^theta.

    Raises:
        ContractViolation: Unknown theorem id.
        HypothesisViolation: The parameters miss a hypothesis of the theorem.

    Usage:
        >>> threshold_exponent("affine-k3", TheoremParams(d=3, n=2))
        Fraction(4, 3)
    """
    try:
        formula = _FORMULAS[theorem_id]
    except KeyError:
        raise ContractViolation(
            with_hint(f"unknown theorem '{theorem_id}'.", f"Choose one of {', '.join(sorted(_FORMULAS))}.")
        ) from None
    return formula(params)
