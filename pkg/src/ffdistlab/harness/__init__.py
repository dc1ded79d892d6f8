"""
Harness module - theorem thresholds, lemma audits, scans, identity checks and the CLI.
"""

from .audits import LEMMAS, LemmaAuditReport, VarietyAuditReport, audit_lemma, audit_variety
from .config import ExperimentConfig, VarietyChoice, parse_sizes
from .identities import IdentityConfig, IdentitySummary, verify_identities
from .reports import render, to_csv, to_json, write_report
from .sampling import Sample, draw_subset, iter_samples
from .scans import ScanReport, ScanRow, scan_thresholds
from .theorems import THEOREMS, TheoremInfo, TheoremParams, threshold_exponent

__all__ = [
    "LEMMAS",
    "THEOREMS",
    "ExperimentConfig",
    "IdentityConfig",
    "IdentitySummary",
    "LemmaAuditReport",
    "Sample",
    "ScanReport",
    "ScanRow",
    "TheoremInfo",
    "TheoremParams",
    "VarietyAuditReport",
    "VarietyChoice",
    "audit_lemma",
    "audit_variety",
    "draw_subset",
    "iter_samples",
    "parse_sizes",
    "render",
    "scan_thresholds",
    "threshold_exponent",
    "to_csv",
    "to_json",
    "verify_identities",
    "write_report",
]
