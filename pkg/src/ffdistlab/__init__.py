from .analysis import (
    DistanceSet,
    EnergyValue,
    RepCount,
    Spectrum,
    cardak_bound,
    distance_set_diff,
    distance_set_sum,
    dot_product_set,
    energy_k,
    energy_via_spectrum,
    fourier_indicator,
    k_distance_set,
    regular_audit,
    sumset_iterate,
)
from .errors import (
    ContractViolation,
    FFDistLabError,
    HypothesisViolation,
    IdentityViolation,
    NumericalFailure,
    ResourceBudgetExceeded,
    UnsupportedOperation,
)
from .field import FieldSpec
from .geometry import AmbientSpec, Point, PointSet, Variety, VarietyDef, max_affine_subspace, sphere
from .harness import ExperimentConfig, TheoremParams, audit_lemma, scan_thresholds, threshold_exponent

__all__ = [
    "AmbientSpec",
    "ContractViolation",
    "DistanceSet",
    "EnergyValue",
    "ExperimentConfig",
    "FFDistLabError",
    "FieldSpec",
    "HypothesisViolation",
    "IdentityViolation",
    "NumericalFailure",
    "Point",
    "PointSet",
    "RepCount",
    "ResourceBudgetExceeded",
    "Spectrum",
    "TheoremParams",
    "UnsupportedOperation",
    "Variety",
    "VarietyDef",
    "audit_lemma",
    "cardak_bound",
    "distance_set_diff",
    "distance_set_sum",
    "dot_product_set",
    "energy_k",
    "energy_via_spectrum",
    "fourier_indicator",
    "k_distance_set",
    "max_affine_subspace",
    "regular_audit",
    "scan_thresholds",
    "sphere",
    "sumset_iterate",
    "threshold_exponent",
]
