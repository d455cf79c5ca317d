"""Splitting behaviour of rational primes in the two quartic families.

Splitting is decided by residue characters modulo the conductor rather than by
factoring the quartic generator polynomial mod p: index primes (those dividing
the index of the equation order in the maximal order) make root counting
unreliable, while the character test is exact for every unramified prime.  A
root-counting oracle is still provided for cross-checks away from index primes.
"""

from dataclasses import dataclass

from .arith import QuarticCharValue, is_prime, jacobi, quartic_character
from .fields import BiquadraticSpec, IntPoly, conductor


@dataclass(frozen=True)
class BiquadraticPattern:
    chi_q: int
    chi_k: int
    chi_r: int


@dataclass(frozen=True)
class CyclicPattern:
    chi_q: int
    chi4_k: QuarticCharValue


def residue_pattern(a: int, spec):
    """Character tuple of a residue class a coprime to the conductor.

    The Artin symbol factors through the conductor, so this is meaningful for
    any integer a with gcd(a, conductor) = 1, prime or not.
    """
    if isinstance(spec, BiquadraticSpec):
        return BiquadraticPattern(jacobi(a, spec.q), jacobi(a, spec.k), jacobi(a, spec.r))
    return CyclicPattern(jacobi(a, spec.q), quartic_character(a, spec.k))


def _require_unramified(p: int, spec) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError("need an odd prime, got %d" % p)
    if conductor(spec) % p == 0:
        raise ValueError("%d ramifies (it divides the conductor)" % p)


def frobenius_pattern(p: int, spec):
    """Character tuple of an unramified odd prime p."""
    _require_unramified(p, spec)
    return residue_pattern(p, spec)


def pattern_splits_completely(pattern) -> bool:
    if isinstance(pattern, BiquadraticPattern):
        return pattern.chi_q == 1 and pattern.chi_k * pattern.chi_r == 1
    if pattern.chi4_k is QuarticCharValue.IMAGINARY:
        return False
    return pattern.chi_q == (1 if pattern.chi4_k is QuarticCharValue.PLUS_ONE else -1)


def pattern_in_TK_minus_TH(pattern) -> bool:
    # the unique pattern that splits completely in the quartic field but not
    # in its class field: the class field adjoins every individual radical
    # (biquadratic) resp. sqrt(q) (cyclic), so some character must be -1
    if isinstance(pattern, BiquadraticPattern):
        return (pattern.chi_q, pattern.chi_k, pattern.chi_r) == (1, -1, -1)
    return pattern.chi_q == -1 and pattern.chi4_k is QuarticCharValue.MINUS_ONE


def splits_completely_in_K(p: int, spec) -> bool:
    """Whether the unramified prime p splits completely in the quartic field."""
    _require_unramified(p, spec)
    return pattern_splits_completely(residue_pattern(p, spec))


def in_TK_minus_TH(p: int, spec) -> bool:
    """Whether p splits completely in the quartic field but not in its class field."""
    _require_unramified(p, spec)
    return pattern_in_TK_minus_TH(residue_pattern(p, spec))


# dense polynomial arithmetic over F_p, coefficients constant-term first

def _ptrim(u):
    while u and u[-1] == 0:
        u.pop()
    return u


def _pmulmod(u, v, g, p):
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                out[i + j] = (out[i + j] + a * b) % p
    # reduce by monic g
    dg = len(g) - 1
    for i in range(len(out) - 1, dg - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(dg):
                out[i - dg + j] = (out[i - dg + j] - c * g[j]) % p
    return _ptrim(out[:dg])


def _pgcd(u, v, p):
    u, v = _ptrim(list(u)), _ptrim(list(v))
    while v:
        inv = pow(v[-1], p - 2, p)
        dv = len(v) - 1
        r = _ptrim(list(u))
        while r and len(r) - 1 >= dv:
            dr = len(r) - 1
            c = r[-1] * inv % p
            for j in range(dv + 1):
                r[dr - dv + j] = (r[dr - dv + j] - c * v[j]) % p
            r = _ptrim(r)
        u, v = v, r
    return u


def root_count_mod_p(g: IntPoly, p: int):
    """(number of distinct roots of g mod p, separability flag).

    Root count is deg gcd(x^p - x, g) over F_p, with x^p computed by repeated
    squaring mod (g, p).  The flag reports whether g mod p is separable; when
    it is not, the count still reports distinct roots but the caller should
    treat the oracle as inapplicable for splitting questions.
    """
    if p == 2 or not is_prime(p):
        raise ValueError("need an odd prime, got %d" % p)
    gp = [c % p for c in g]
    deriv = _ptrim([(i * c) % p for i, c in enumerate(gp)][1:])
    separable = len(_pgcd(gp, deriv, p)) <= 1
    # x^p mod (g, p)
    acc, base, e = [1], [0, 1], p
    while e:
        if e & 1:
            acc = _pmulmod(acc, base, gp, p)
        base = _pmulmod(base, base, gp, p)
        e >>= 1
    acc = acc + [0] * (2 - len(acc))
    acc[1] = (acc[1] - 1) % p          # x^p - x
    common = _pgcd(gp, _ptrim(acc), p)
    return max(len(common) - 1, 0), separable
