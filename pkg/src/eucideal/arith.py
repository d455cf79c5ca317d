"""Exact integer arithmetic primitives: primality, residue characters, square tests.

Everything here is a pure function over Python's arbitrary-precision integers,
so nothing can overflow silently and all results are exact.
"""

from enum import Enum
from math import gcd, isqrt


class QuarticCharValue(Enum):
    """Value class of a quartic residue character.

    Only the two real values matter to the splitting tests, so the two
    primitive fourth roots of unity are collapsed into IMAGINARY.  This also
    keeps results independent of any choice of generator for the residue
    group.
    """

    PLUS_ONE = "+1"
    MINUS_ONE = "-1"
    IMAGINARY = "i"


# The smallest composite that is a strong pseudoprime to all twelve prime
# bases up to 37 is 318665857834031151167461 (Sorenson & Webster), so
# Miller-Rabin with these witnesses is a proof of primality below that bound,
# which comfortably covers 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_CERTIFIED_BOUND = 318665857834031151167461


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for every accepted input.

    Inputs at or above the certified Miller-Rabin bound are rejected rather
    than answered probabilistically.
    """
    if n >= _MR_CERTIFIED_BOUND:
        raise ValueError("primality is only certified below %d" % _MR_CERTIFIED_BOUND)
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n), by the binary reciprocity algorithm.

    Equals the Legendre symbol when n is an odd prime.
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError("modulus must be odd and positive, got %d" % n)
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def quartic_character(p: int, k: int) -> QuarticCharValue:
    """Value class of p under a quartic character modulo the prime k = 1 (mod 4).

    PLUS_ONE and MINUS_ONE are exactly the quadratic-residue cases; IMAGINARY
    covers the two non-residue classes jointly.
    """
    if k % 4 != 1 or not is_prime(k):
        raise ValueError("modulus must be a prime congruent to 1 mod 4, got %d" % k)
    if gcd(p, k) != 1:
        raise ValueError("argument %d shares a factor with modulus %d" % (p, k))
    t = pow(p % k, (k - 1) // 4, k)
    if t == 1:
        return QuarticCharValue.PLUS_ONE
    if t == k - 1:
        return QuarticCharValue.MINUS_ONE
    return QuarticCharValue.IMAGINARY


def is_perfect_square(n: int):
    """The nonnegative square root when n is a perfect square, else None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def primes_below(limit: int) -> list:
    """All primes < limit, by a plain sieve of Eratosthenes."""
    if limit <= 2:
        return []
    sieve = bytearray(b"\x01") * limit
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return [i for i in range(limit) if sieve[i]]


def factorize(n: int) -> dict:
    """Prime factorization {p: e} by trial division.

    Intended for the desk-scale inputs used here (conductors, discriminants);
    not a general-purpose factoring routine.
    """
    if n < 1:
        raise ValueError("need n >= 1, got %d" % n)
    out = {}
    for p in (2, 3):
        while n % p == 0:
            n //= p
            out[p] = out.get(p, 0) + 1
    # remaining factors are 6t +- 1
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                n //= p
                out[p] = out.get(p, 0) + 1
        d += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorize(n).values())
