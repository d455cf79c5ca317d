"""Workbench for totally real quartic fields with a non-principal Euclidean ideal.

Two parameter families are covered: biquadratic fields built from three
primes (q, k, r) and cyclic quartic fields built from (q, k, b).  The library
validates the family hypotheses, computes conductors, discriminants and
defining polynomials, determines class numbers (by a unit-index formula for
the biquadratic family, from a fixture for the cyclic one), searches for the
witness prime pair that certifies the Euclidean ideal class, and builds
Motzkin-style level ladders over the integers.
"""

from .errors import (ConditionFailure, EucidealError, HypothesisViolation,
                     InternalInconsistency, SearchExhausted, UnknownClassNumber)
from .fields import BiquadraticSpec, CyclicSpec, validate_biquadratic, validate_cyclic
from .report_cli import FieldReport, build_report, emit, parse_reports, search_grid

__all__ = [
    "BiquadraticSpec", "CyclicSpec", "ConditionFailure", "EucidealError",
    "FieldReport", "HypothesisViolation", "InternalInconsistency",
    "SearchExhausted", "UnknownClassNumber", "build_report", "emit",
    "parse_reports", "search_grid", "validate_biquadratic", "validate_cyclic",
]

__version__ = "0.1.0"
