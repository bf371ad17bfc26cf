"""Certification engine: interval arithmetic, bisection certification of
the inequality corpus, grid verification of the global minimum, the
randomized majorization check, and the proof-chain witness."""

from .certify import EPS_CERT, CertifiedInequality, certify
from .corpus import THRESHOLD, corpus, quartic_coefficient_margin, ratio_value
from .engine import (
    ANTISYM_TOL,
    RIGOR_FLOOR,
    GlobalMinReport,
    MajorizationReport,
    ProofChainWitness,
    majorization_property,
    proof_chain,
    verify_global_min,
)
from .interval import EnclosureError, Interval, dsinc_iv, intersect, sinc_iv, sinc_sq_iv
from .suite import CheckResult, SuiteConfig, run_suite, suite_exit_code

__all__ = [
    "ANTISYM_TOL",
    "EPS_CERT",
    "RIGOR_FLOOR",
    "THRESHOLD",
    "CertifiedInequality",
    "CheckResult",
    "EnclosureError",
    "GlobalMinReport",
    "Interval",
    "MajorizationReport",
    "ProofChainWitness",
    "SuiteConfig",
    "certify",
    "corpus",
    "dsinc_iv",
    "intersect",
    "majorization_property",
    "proof_chain",
    "quartic_coefficient_margin",
    "ratio_value",
    "run_suite",
    "sinc_iv",
    "sinc_sq_iv",
    "suite_exit_code",
    "verify_global_min",
]
