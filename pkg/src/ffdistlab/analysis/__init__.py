"""
Analysis module - exact additive combinatorics and Fourier analysis on F_q^d.
"""

from .combinatorics import (
    DistanceSet,
    EnergyValue,
    RepCount,
    cardak_bound,
    distance_set_diff,
    distance_set_sum,
    dot_product_set,
    energy_bruteforce,
    energy_k,
    energy_pair,
    k_distance_set,
    sumset_iterate,
)
from .spectral import (
    CharacterTable,
    RegularityReport,
    Spectrum,
    character_table,
    energy_via_spectrum,
    exponent_classes,
    fourier_indicator,
    fourier_indicator_direct,
    max_nonzero_coefficient,
    parseval_check,
    regular_audit,
    sumset_via_spectrum,
)

__all__ = [
    "CharacterTable",
    "DistanceSet",
    "EnergyValue",
    "RegularityReport",
    "RepCount",
    "Spectrum",
    "cardak_bound",
    "character_table",
    "distance_set_diff",
    "distance_set_sum",
    "dot_product_set",
    "energy_bruteforce",
    "energy_k",
    "energy_pair",
    "energy_via_spectrum",
    "exponent_classes",
    "fourier_indicator",
    "fourier_indicator_direct",
    "k_distance_set",
    "max_nonzero_coefficient",
    "parseval_check",
    "regular_audit",
    "sumset_iterate",
    "sumset_via_spectrum",
]
