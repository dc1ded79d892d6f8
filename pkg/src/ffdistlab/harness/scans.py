"""
Threshold scans: how |Delta_k(A)| grows with |A| for A sampled inside a variety.

For every size on the grid each sampled set contributes |Delta_k(A)| and the
sizes of the split sumsets A_l, A_{k-l} (l = floor(k/2)). Rows are emitted in
grid order so a fixed seed gives byte-identical reports.
"""

import logging
import math
from fractions import Fraction

from pydantic import BaseModel, ConfigDict

from ffdistlab.analysis import k_distance_set, sumset_iterate
from ffdistlab.errors import ContractViolation
from ffdistlab.geometry import Variety, max_affine_subspace
from ffdistlab.types import Rational

from .config import ExperimentConfig
from .sampling import is_exhaustive, iter_samples
from .theorems import THEOREMS, TheoremParams, threshold_exponent

logger = logging.getLogger(__name__)

CROSSOVER_FRACTION = Fraction(1, 2)


class ScanRow(BaseModel):
    """
    One grid size.

    Column order is part of the CSV format.
    """

    model_config = ConfigDict(frozen=True)

    size: int
    log_q_size: float
    samples: int
    exhaustive: bool
    min_delta: int
    mean_delta: float
    max_delta: int
    fraction_ggq: float
    predicted_exponent: Rational | None
    split_product_ok_low: float
    split_product_ok_high: float


class ScanReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    theorem: str | None
    variety: str
    q: int
    d: int
    k: int
    seed: int
    ggq_fraction: Rational
    predicted_exponent: Rational | None
    predicted_size: float | None
    crossover_size: int | None
    crossover_exponent: float | None
    rows: list[ScanRow]
    config_hash: str


def theorem_params(config: ExperimentConfig, variety: Variety, theorem_id: str) -> TheoremParams:
    """Parameters of `theorem_id` for this variety; alpha comes from t_V when needed."""
    ambient = variety.ambient
    alpha = Fraction(0)
    if theorem_id.startswith("affine"):
        report = max_affine_subspace(variety, min(config.dim_cap, ambient.d))
        alpha = min(Fraction(max(report.dimension, 0)), Fraction(ambient.d + 1, 2))
    info = THEOREMS.get(theorem_id)
    if info is not None and info.k is not None and info.k != config.k:
        logger.warning("Theorem '%s' is stated for k = %d; scanning with k = %d", theorem_id, info.k, config.k)
    return TheoremParams(
        d=ambient.d,
        n=variety.definition.declared_dim,
        k=max(config.k, 2),
        alpha=alpha,
        c=config.c,
        beta=config.beta,
        q=ambient.q,
    )


def scan_thresholds(config: ExperimentConfig, theorem_id: str | None = None) -> ScanReport:
    """
    Sample sets on the size grid and tabulate |Delta_k(A)|.

    Raises:
        ContractViolation: k < 2 or a grid size above |V|.
        HypothesisViolation: The variety misses a hypothesis of `theorem_id`.
    """
    if config.k < 2:
        raise ContractViolation(f"Delta_k needs k >= 2, got {config.k}.")
    variety = config.build_variety()
    ambient = variety.ambient
    q, d, k = ambient.q, ambient.d, config.k
    split = k // 2

    predicted: Fraction | None = None
    if theorem_id is not None:
        predicted = threshold_exponent(theorem_id, theorem_params(config, variety, theorem_id))

    # q^{(d+1)/2} is compared after squaring both sides
    threshold = q ** (d + 1)
    rows: list[ScanRow] = []
    for size in config.resolve_sizes(len(variety)):
        if size == 0:
            continue
        deltas: list[int] = []
        ok_low = ok_high = 0
        for sample in iter_samples(variety, size, config.sample_count, config.seed):
            A = sample.points
            deltas.append(len(k_distance_set(A, k)))
            product = sumset_iterate(A, split).support_size * sumset_iterate(A, k - split).support_size
            ok_low += product * product >= threshold
            ok_high += product >= threshold
        count = len(deltas)
        rows.append(
            ScanRow(
                size=size,
                log_q_size=math.log(size, q),
                samples=count,
                exhaustive=is_exhaustive(len(variety), size),
                min_delta=min(deltas),
                mean_delta=sum(deltas) / count,
                max_delta=max(deltas),
                fraction_ggq=sum(delta >= config.ggq_fraction * q for delta in deltas) / count,
                predicted_exponent=predicted,
                split_product_ok_low=ok_low / count,
                split_product_ok_high=ok_high / count,
            )
        )
        logger.info("Scanned |A| = %d: mean |Delta_%d| = %.3f", size, k, rows[-1].mean_delta)

    crossover = next((row for row in rows if row.fraction_ggq >= CROSSOVER_FRACTION), None)
    return ScanReport(
        theorem=theorem_id,
        variety=config.variety,
        q=q,
        d=d,
        k=k,
        seed=config.seed,
        ggq_fraction=config.ggq_fraction,
        predicted_exponent=predicted,
        predicted_size=None if predicted is None else float(config.size_constant) * q ** float(predicted),
        crossover_size=crossover.size if crossover else None,
        crossover_exponent=crossover.log_q_size if crossover else None,
        rows=rows,
        config_hash=config.config_hash(),
    )
