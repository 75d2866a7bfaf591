"""
Delannoy Lab
Exact verification of divisibility theorems for generalized Delannoy and
Schröder polynomials.

This package provides:
- An exact integer kernel and a dense polynomial ring over Z
- The Schmidt (D) and generalized Schröder (S) polynomial families
- Memoized reduction coefficient tables (C/K, b/a, B/A pair, m-fold, tilde)
- Lemma-level identity and parity verifiers
- Theorem-level Z[x] divisibility checks and a sharpness probe
- A click CLI that sweeps checks in parallel and emits JSONL/CSV/table reports
"""

__version__ = "0.2.0"
__author__ = "Curtis Mortensen"
__license__ = "MIT"

import logging

from src.exact_math import DomainError, InvariantViolation, binomial, catalan
from src.IntPoly import IntPoly, NotDivisibleError
from src.sequences import FamilyId, central_delannoy, delannoy_poly, large_schroder, schroder_poly
from src.CoeffTable import CoeffTable
from src.TheoremChecker import DivisibilityReport, SumSpec, weighted_power_sum
from src.identities import CheckResult

# Package metadata
__all__ = [
    "DomainError",
    "InvariantViolation",
    "NotDivisibleError",
    "binomial",
    "catalan",
    "IntPoly",
    "FamilyId",
    "delannoy_poly",
    "schroder_poly",
    "central_delannoy",
    "large_schroder",
    "CoeffTable",
    "SumSpec",
    "DivisibilityReport",
    "weighted_power_sum",
    "CheckResult",
]

# Initialize logging
logging.getLogger(__name__).addHandler(logging.NullHandler())
