"""
Empirical audits: the regularity of a variety and the energy and distance
inequalities that the threshold results are built from.

An inequality with a hidden constant has no finite pass/fail verdict, so a
lemma audit reports the extreme ratio LHS / RHS over all sampled sets:
the maximum for upper bounds, the minimum for lower bounds.
"""

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Literal

from pydantic import BaseModel, ConfigDict

from ffdistlab.analysis import (
    distance_set_sum,
    energy_k,
    energy_pair,
    regular_audit,
    sumset_iterate,
)
from ffdistlab.errors import ContractViolation, HypothesisViolation, with_hint
from ffdistlab.field import is_primitive, is_square
from ffdistlab.geometry import (
    AffineSubspaceReport,
    PointSet,
    Variety,
    max_affine_subspace,
    size_profile,
    sphere_size_formula,
)
from ffdistlab.types import Rational

from .config import ExperimentConfig
from .sampling import iter_samples
from .theorems import TheoremParams

logger = logging.getLogger(__name__)

Number = Fraction | float
Bound = Literal["upper", "lower"]


# =============================================================================
# Variety audit
# =============================================================================


class VarietyAuditReport(BaseModel):
    """Size, Fourier decay and largest flat of one variety."""

    model_config = ConfigDict(frozen=True)

    variety: str
    ambient: str
    cardinality: int
    declared_dim: int
    declared_deg: int
    size_ratio: Rational
    dimension_ratio: Rational
    max_coefficient: float
    decay_constant: float
    t_V: int
    affine: AffineSubspaceReport
    expected_size: int | None = None
    flags: list[str] = []
    config_hash: str = ""


def audit_variety(config: ExperimentConfig) -> VarietyAuditReport:
    variety = config.build_variety()
    ambient = variety.ambient
    regularity = regular_audit(variety)
    affine = max_affine_subspace(variety, min(config.dim_cap, ambient.d))
    definition = variety.definition
    expected = None
    if definition.kind == "sphere" and definition.radius is not None:
        expected = sphere_size_formula(ambient, definition.radius)
    return VarietyAuditReport(
        variety=config.variety,
        ambient=repr(ambient),
        cardinality=len(variety),
        declared_dim=definition.declared_dim,
        declared_deg=definition.declared_deg,
        size_ratio=Fraction(len(variety), ambient.q ** (ambient.d - 1)),
        dimension_ratio=size_profile(variety).ratio,
        max_coefficient=regularity.max_coefficient,
        decay_constant=regularity.decay_constant,
        t_V=affine.t_V,
        affine=affine,
        expected_size=expected,
        flags=list(variety.flags),
        config_hash=config.config_hash(),
    )


# =============================================================================
# Lemma audits
# =============================================================================


class LemmaAuditReport(BaseModel):
    """
    Outcome of one lemma audit.

    Attributes:
        empirical_constant: max LHS/RHS for upper bounds, min LHS/RHS for lower bounds.
        witness: Coordinates of the set attaining it.
        skipped: Sampled sets that missed a per-set hypothesis.
        details: Extra aggregates (second thresholds, branch counts).
    """

    model_config = ConfigDict(frozen=True)

    lemma: str
    statement: str
    bound: Bound
    hypotheses: list[str]
    instances: int
    skipped: int
    empirical_constant: float
    worst_size: int
    witness: list[tuple[int, ...]]
    details: dict[str, float] = {}
    seed: int
    config_hash: str


@dataclass(frozen=True)
class _Outcome:
    ratio: Number
    extras: dict[str, float] = field(default_factory=dict)


@dataclass
class _Context:
    config: ExperimentConfig
    variety: Variety
    q: int
    d: int
    k: int
    t_V: int | None = None


@dataclass(frozen=True)
class _Lemma:
    id: str
    statement: str
    bound: Bound
    hypotheses: Callable[[_Context], list[str]]
    evaluate: Callable[[PointSet, _Context], Iterable[_Outcome]]
    needs_t_V: bool = False


def _qpow(q: int, exponent: Fraction) -> Number:
    """q^exponent, exact when the exponent is an integer."""
    if exponent.denominator == 1:
        return Fraction(q) ** int(exponent)
    return float(q) ** float(exponent)


def _ratio(lhs: Number, rhs: Number) -> Number:
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        return lhs / rhs
    return float(lhs) / float(rhs)


def _require(lemma: str, condition: bool, hypothesis: str, hint: str | None = None) -> str:
    if not condition:
        raise HypothesisViolation(lemma, hypothesis, hint)
    return hypothesis


def _sphere_radius(lemma: str, ctx: _Context) -> int:
    definition = ctx.variety.definition
    _require(lemma, definition.kind == "sphere" and definition.radius is not None, "a sphere S_j^{d-1}",
             "Pass --variety sphere:<j>.")
    assert definition.radius is not None
    return definition.radius


def _odd_dimension_hypotheses(lemma: str, ctx: _Context) -> list[str]:
    d = ctx.d
    found = [_require(lemma, d % 2 == 1 and d >= 3, "an odd dimension d >= 3")]
    if d % 4 == 1:
        found.append(_require(lemma, d >= 5, "d = 4l + 1 with l >= 1"))
    else:
        found.append(_require(lemma, ctx.q % 4 == 1, "q = 1 mod 4 when d = 4l - 1"))
    return found


def _primitive_radius(lemma: str, ctx: _Context) -> str:
    j = _sphere_radius(lemma, ctx)
    spec = ctx.variety.ambient.field
    return _require(lemma, j != 0 and is_primitive(spec, j), "a radius j that is a primitive element of F_q")


def _energy(A: PointSet, k: int) -> int:
    return energy_k(A, k, cross_check=False).value


# --- pair energy on spheres --------------------------------------------------


def _pair_energy_outcome(A: PointSet, ctx: _Context) -> Iterable[_Outcome]:
    n = len(A)
    rhs = Fraction(n**3, ctx.q) + _qpow(ctx.q, Fraction(ctx.d - 2, 2)) * n**2
    yield _Outcome(_ratio(Fraction(energy_pair(A, A).value), rhs))


def _pair_energy_even_hypotheses(ctx: _Context) -> list[str]:
    lemma = "pair-energy-even"
    j = _sphere_radius(lemma, ctx)
    return [
        _require(lemma, ctx.d >= 4 and ctx.d % 2 == 0, "an even dimension d >= 4"),
        _require(lemma, j != 0, "a nonzero radius j"),
    ]


def _pair_energy_odd_hypotheses(ctx: _Context) -> list[str]:
    lemma = "pair-energy-odd"
    return [*_odd_dimension_hypotheses(lemma, ctx), _primitive_radius(lemma, ctx)]


# --- energy induction ----------------------------------------------------------


def _energy_induction_hypotheses(ctx: _Context) -> list[str]:
    lemma = "energy-induction"
    _sphere_radius(lemma, ctx)
    return ["a sphere S_j^{d-1}", _require(lemma, ctx.k >= 2, "k >= 2")]


def _energy_induction_outcome(A: PointSet, ctx: _Context) -> Iterable[_Outcome]:
    n, k, q = len(A), ctx.k, ctx.q
    rhs = Fraction(q ** (ctx.d - 1) * _energy(A, k - 1)) + Fraction(n ** (2 * k - 1), q)
    yield _Outcome(_ratio(Fraction(_energy(A, k)), rhs))


# --- two-set distance lemmas ---------------------------------------------------


def _two_set_even_hypotheses(ctx: _Context) -> list[str]:
    lemma = "two-set-even"
    return [
        _require(lemma, ctx.d >= 2 and ctx.d % 2 == 0, "an even dimension d >= 2"),
        _require(lemma, ctx.k >= 2, "k >= 2 so that B = A_{k-1} is defined"),
    ]


def _two_set_even_outcome(A: PointSet, ctx: _Context) -> Iterable[_Outcome]:
    q, d = ctx.q, ctx.d
    B = sumset_iterate(A, ctx.k - 1).support
    a, b = len(A), len(B)
    if a * b < 16 * q**d or not q ** (d - 1) <= a * a < q ** (d + 1) or b * b < 4 * q ** (d + 1):
        return
    yield _Outcome(Fraction(len(distance_set_sum(A, B)), q))


def _two_set_quarter_hypotheses(ctx: _Context) -> list[str]:
    lemma = "two-set-quarter"
    j = _sphere_radius(lemma, ctx)
    spec = ctx.variety.ambient.field
    return [
        *_odd_dimension_hypotheses(lemma, ctx),
        _require(lemma, j != 0 and not is_square(spec, j), "a radius j that is a non-square of F_q^*"),
        _require(lemma, ctx.k >= 2, "k >= 2 so that B = A_{k-1} is defined"),
    ]


def _two_set_quarter_outcome(A: PointSet, ctx: _Context) -> Iterable[_Outcome]:
    q = ctx.q
    B = sumset_iterate(A, ctx.k - 1).support
    if len(A) * len(B) < 4 * q**ctx.d:
        return
    yield _Outcome(Fraction(4 * len(distance_set_sum(A, B)), q))


def _two_set_generic_hypotheses(ctx: _Context) -> list[str]:
    return [_require("two-set-generic", ctx.k >= 2, "k >= 2 so that B = A_{k-1} is defined")]


def _two_set_generic_outcome(A: PointSet, ctx: _Context) -> Iterable[_Outcome]:
    q, d = ctx.q, ctx.d
    B = sumset_iterate(A, ctx.k - 1).support
    product = len(A) * len(B)
    if product * product < q ** (d + 1):
        return
    ratio = Fraction(len(distance_set_sum(A, B)), q)
    extras: dict[str, float] = {}
    if product >= q ** (d + 1):
        extras = {"min_ratio_high_threshold": float(ratio), "count_high_threshold": 1.0}
    yield _Outcome(ratio, extras)


# --- Cauchy-Schwarz sumset bound -------------------------------------------------


def _cauchy_schwarz_hypotheses(ctx: _Context) -> list[str]:
    return ["A non-empty", "1 <= l <= k"]


def _cauchy_schwarz_outcome(A: PointSet, ctx: _Context) -> Iterable[_Outcome]:
    n = len(A)
    for l in range(1, ctx.k + 1):
        rep = sumset_iterate(A, l)
        yield _Outcome(Fraction(rep.support_size * rep.sum_of_squares(), n ** (2 * l)))


# --- energy on a variety ------------------------------------------------------------


def _declared_dim(ctx: _Context) -> int:
    return ctx.variety.definition.declared_dim


def _variety_energy_hypotheses(ctx: _Context) -> list[str]:
    n = _declared_dim(ctx)
    _require("variety-energy", n >= 1, "a variety of dimension n >= 1")
    return [f"n = {n}", f"t = t_V = {ctx.t_V}"]


def _variety_energy_outcome(A: PointSet, ctx: _Context) -> Iterable[_Outcome]:
    n, size = _declared_dim(ctx), len(A)
    assert ctx.t_V is not None
    energy = Fraction(energy_pair(A, A).value)
    if n == 1:
        yield _Outcome(energy / (size * size * ctx.t_V))
        return
    gamma = TheoremParams(d=ctx.d, n=n).gamma
    rhs = size**3 * (ctx.t_V / size) ** float(gamma)
    yield _Outcome(float(energy) / rhs)


def _dichotomy_params(ctx: _Context) -> TheoremParams:
    return TheoremParams(d=ctx.d, n=_declared_dim(ctx), c=ctx.config.c, beta=ctx.config.beta)


def _energy_dichotomy_hypotheses(ctx: _Context) -> list[str]:
    params = _dichotomy_params(ctx)
    return [f"c = {params.c}", f"beta = {params.effective_beta}", f"k = {ctx.k} >= 1"]


def _energy_dichotomy_outcome(A: PointSet, ctx: _Context) -> Iterable[_Outcome]:
    params = _dichotomy_params(ctx)
    saving = float(params.c * params.effective_beta / 4)
    n, k = len(A), ctx.k
    e_k = _energy(A, k)
    if e_k <= float(n) ** (2 * k - 1 - saving):
        yield _Outcome(0.0, {"count_first_branch": 1.0})
        return
    yield _Outcome(_energy(A, k + 1) / (float(n) ** (2 - saving) * e_k), {"count_second_branch": 1.0})


# --- higher energies on spheres ---------------------------------------------------


def _sphere_energy_hypotheses(lemma: str, ctx: _Context) -> list[str]:
    j = _sphere_radius(lemma, ctx)
    found = [
        _require(lemma, ctx.d >= 3, "d >= 3"),
        _require(lemma, ctx.k >= 2, "l = k >= 2"),
        _require(lemma, j != 0, "a nonzero radius j"),
    ]
    if ctx.d % 2 == 1:
        found += [*_odd_dimension_hypotheses(lemma, ctx), _primitive_radius(lemma, ctx)]
    return found


def _sphere_energy_outcome(A: PointSet, ctx: _Context, small: bool) -> Iterable[_Outcome]:
    q, d, l, n = ctx.q, ctx.d, ctx.k, len(A)
    if n * n <= q ** (d - 1) or (small and n * n > q**d):
        return
    rhs: Number = _qpow(q, Fraction((d - 1) * (2 * l - 3) - 1, 2)) * n**2 + Fraction(n ** (2 * l - 1), q)
    if not small:
        rhs = rhs + _qpow(q, Fraction((d - 1) * (l - 2) - 1)) * n**3
    yield _Outcome(_ratio(Fraction(_energy(A, l)), rhs))


LEMMAS: dict[str, _Lemma] = {
    lemma.id: lemma
    for lemma in (
        _Lemma("pair-energy-even", "E(A) << |A|^3/q + q^((d-2)/2)|A|^2 on S_j, d even", "upper",
               _pair_energy_even_hypotheses, _pair_energy_outcome),
        _Lemma("pair-energy-odd", "E(A) << |A|^3/q + q^((d-2)/2)|A|^2 on S_j, d odd, j primitive", "upper",
               _pair_energy_odd_hypotheses, _pair_energy_outcome),
        _Lemma("energy-induction", "E_k(A) << q^(d-1) E_{k-1}(A) + |A|^(2k-1)/q on S_j", "upper",
               _energy_induction_hypotheses, _energy_induction_outcome),
        _Lemma("two-set-even", "|Delta_2(A,B)| >> q for d even, |A||B| >= 16q^d, B = A_{k-1}", "lower",
               _two_set_even_hypotheses, _two_set_even_outcome),
        _Lemma("two-set-quarter", "|Delta_2(A,B)| >= q/4 for A in S_j, j non-square, |A||B| >= 4q^d", "lower",
               _two_set_quarter_hypotheses, _two_set_quarter_outcome),
        _Lemma("two-set-generic", "|Delta_2(A,B)| >> q once |A||B| >> q^((d+1)/2)", "lower",
               _two_set_generic_hypotheses, _two_set_generic_outcome),
        _Lemma("sumset-cauchy-schwarz", "|A_l| E_l(A) / |A|^(2l) >= 1", "lower",
               _cauchy_schwarz_hypotheses, _cauchy_schwarz_outcome),
        _Lemma("variety-energy", "E(A) << |A|^3 (t/|A|)^gamma, or |A|^2 t when n = 1", "upper",
               _variety_energy_hypotheses, _variety_energy_outcome, needs_t_V=True),
        _Lemma("energy-dichotomy", "E_k <= |A|^(2k-1-c beta/4) or E_{k+1} << |A|^(2-c beta/4) E_k", "upper",
               _energy_dichotomy_hypotheses, _energy_dichotomy_outcome),
        _Lemma("sphere-energy-k",
               "E_l << q^(((d-1)(2l-3)-1)/2)|A|^2 + q^((d-1)(l-2)-1)|A|^3 + |A|^(2l-1)/q", "upper",
               partial(_sphere_energy_hypotheses, "sphere-energy-k"),
               partial(_sphere_energy_outcome, small=False)),
        _Lemma("sphere-energy-k-small",
               "E_l << q^(((d-1)(2l-3)-1)/2)|A|^2 + |A|^(2l-1)/q for |A| <= q^(d/2)", "upper",
               partial(_sphere_energy_hypotheses, "sphere-energy-k-small"),
               partial(_sphere_energy_outcome, small=True)),
    )
}

_PER_SET_HYPOTHESES = {
    "two-set-even": "|A||B| >= 16q^d, q^((d-1)/2) <= |A| < q^((d+1)/2) and |B| >= 2q^((d+1)/2)",
    "two-set-quarter": "|A||B| >= 4q^d",
    "two-set-generic": "|A||B| >= q^((d+1)/2)",
    "sphere-energy-k": "|A| > q^((d-1)/2)",
    "sphere-energy-k-small": "q^((d-1)/2) < |A| <= q^(d/2)",
}


def _merge_extras(total: dict[str, float], extras: dict[str, float]) -> None:
    for key, value in extras.items():
        if key not in total:
            total[key] = value
        elif key.startswith("min_"):
            total[key] = min(total[key], value)
        elif key.startswith("max_"):
            total[key] = max(total[key], value)
        else:
            total[key] += value


def audit_lemma(lemma_id: str, config: ExperimentConfig) -> LemmaAuditReport:
    """
    Sample sets per `config`, evaluate LHS / RHS exactly where possible and
    report the extreme ratio with its witness.

    Raises:
        ContractViolation: Unknown lemma id.
        HypothesisViolation: The variety misses a hypothesis, or no sampled
            set satisfies the per-set hypothesis.
    """
    try:
        lemma = LEMMAS[lemma_id]
    except KeyError:
        raise ContractViolation(
            with_hint(f"unknown lemma '{lemma_id}'.", f"Choose one of {', '.join(sorted(LEMMAS))}.")
        ) from None

    variety = config.build_variety()
    ambient = variety.ambient
    ctx = _Context(config=config, variety=variety, q=ambient.q, d=ambient.d, k=config.k)
    if lemma.needs_t_V:
        ctx.t_V = max_affine_subspace(variety, min(config.dim_cap, ambient.d)).t_V
    hypotheses = lemma.hypotheses(ctx)

    worst: tuple[Number, PointSet] | None = None
    instances = skipped = 0
    details: dict[str, float] = {}
    for size in config.resolve_sizes(len(variety)):
        if size == 0:
            continue
        for sample in iter_samples(variety, size, config.sample_count, config.seed):
            outcomes = list(lemma.evaluate(sample.points, ctx))
            if not outcomes:
                skipped += 1
                continue
            for outcome in outcomes:
                instances += 1
                _merge_extras(details, outcome.extras)
                if worst is None or (
                    outcome.ratio > worst[0] if lemma.bound == "upper" else outcome.ratio < worst[0]
                ):
                    worst = (outcome.ratio, sample.points)
        logger.info("Audited %s at |A| = %d", lemma_id, size)

    if worst is None:
        raise HypothesisViolation(
            lemma_id,
            _PER_SET_HYPOTHESES.get(lemma_id, "at least one sampled set"),
            "No sampled set qualified; widen the size grid.",
        )
    ratio, witness = worst
    return LemmaAuditReport(
        lemma=lemma_id,
        statement=lemma.statement,
        bound=lemma.bound,
        hypotheses=hypotheses + ([_PER_SET_HYPOTHESES[lemma_id]] if lemma_id in _PER_SET_HYPOTHESES else []),
        instances=instances,
        skipped=skipped,
        empirical_constant=float(ratio),
        worst_size=len(witness),
        witness=[p.coords for p in witness.points()],
        details=details,
        seed=config.seed,
        config_hash=config.config_hash(),
    )
