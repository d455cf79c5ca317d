"""Witness primes for the non-principal Euclidean ideal construction.

For an eligible field the pipeline picks the smallest admissible prime s,
derives u from it, and then verifies the three admissibility conditions
explicitly; the verification never trusts the construction.
"""

from dataclasses import dataclass
from math import gcd

from .arith import is_prime
from .errors import ConditionFailure, SearchExhausted
from .fields import BiquadraticSpec, conductor
from .splitting import in_TK_minus_TH, pattern_in_TK_minus_TH, residue_pattern

DEFAULT_SEARCH_BOUND = 10 ** 6


@dataclass(frozen=True)
class ConditionReport:
    u: int
    ell: int
    cond1: bool     # gcd(u, ell) = 1
    cond2: bool     # gcd((u-1)/2, ell) = 1
    cond3: bool     # the residue class of u has the split-in-K-not-in-H pattern

    @property
    def failed(self) -> tuple:
        return tuple(i for i, ok in enumerate((self.cond1, self.cond2, self.cond3), 1) if not ok)

    @property
    def all_pass(self) -> bool:
        return not self.failed


@dataclass(frozen=True)
class WitnessPair:
    s: int
    u: int
    ell: int
    conditions_verified: tuple


def _avoided_moduli(spec) -> tuple:
    # the progressions p = 1 (mod m) to stay out of, one per conductor prime
    if isinstance(spec, BiquadraticSpec):
        return (spec.q, spec.k, spec.r)
    return (spec.q, spec.k)


def find_s(spec, bound: int = DEFAULT_SEARCH_BOUND) -> int:
    """Smallest admissible witness prime.

    Admissible: odd, coprime to the conductor, congruent to 1 modulo none of
    the conductor primes, and splitting completely in the quartic field but
    not in its class field.
    """
    moduli = _avoided_moduli(spec)
    s = 1
    while s + 2 <= bound:
        s += 2
        if not is_prime(s) or s in moduli:
            continue
        if any(s % m == 1 for m in moduli):
            continue
        if in_TK_minus_TH(s, spec):
            return s
    raise SearchExhausted("no admissible witness prime below %d for %r" % (bound, spec))


def derive_u(s: int, spec) -> int:
    """u = s when s != 1 (mod 4), else s shifted by twice the conductor."""
    return s if s % 4 != 1 else s + 2 * conductor(spec)


def check_conditions(u: int, spec) -> ConditionReport:
    """Explicit audit of the three admissibility conditions for u.

    Returns the full report when all three pass and raises ConditionFailure
    (carrying the same report) otherwise.
    """
    if u <= 0 or u % 2 == 0:
        raise ValueError("u must be an odd positive integer, got %d" % u)
    cond = conductor(spec)
    ell = 16 * cond
    c1 = gcd(u, ell) == 1
    c2 = gcd((u - 1) // 2, ell) == 1
    c3 = c1 and pattern_in_TK_minus_TH(residue_pattern(u % cond, spec))
    report = ConditionReport(u=u, ell=ell, cond1=c1, cond2=c2, cond3=c3)
    if not report.all_pass:
        raise ConditionFailure(report)
    return report


def witness_pair(spec, bound: int = DEFAULT_SEARCH_BOUND) -> WitnessPair:
    """Construct and verify (s, u) in one step."""
    s = find_s(spec, bound)
    u = derive_u(s, spec)
    report = check_conditions(u, spec)
    return WitnessPair(s=s, u=u, ell=report.ell,
                       conditions_verified=(report.cond1, report.cond2, report.cond3))
