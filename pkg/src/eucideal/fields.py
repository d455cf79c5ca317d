"""Parameter validation, conductors, discriminants, minimal polynomials, and
Hilbert-class-field descriptors for the two quartic families.

Polynomials are tuples of integer coefficients, constant term first, always
monic.  The two families:

  biquadratic: Q(sqrt(q), sqrt(k*r)) for distinct primes q,k,r >= 29, all 1 mod 4
  cyclic:      Q(sqrt(q*(k + b*sqrt(k)))) for distinct primes q,k >= 17, 1 mod 4,
               with 4 | b and k - b^2 a positive perfect square
"""

from dataclasses import dataclass

from .arith import is_perfect_square, is_prime
from .errors import HypothesisViolation

IntPoly = tuple


def poly_mul(u: IntPoly, v: IntPoly) -> IntPoly:
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        for j, b in enumerate(v):
            out[i + j] += a * b
    return tuple(out)


def poly_sub(u: IntPoly, v: IntPoly) -> IntPoly:
    n = max(len(u), len(v))
    return tuple((u[i] if i < len(u) else 0) - (v[i] if i < len(v) else 0) for i in range(n))


def poly_eval(p: IntPoly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class BiquadraticSpec:
    q: int
    k: int
    r: int

    family = "biquadratic"

    @property
    def third(self) -> int:
        return self.r


@dataclass(frozen=True)
class CyclicSpec:
    q: int
    k: int
    b: int
    root: int    # root**2 == k - b**2

    family = "cyclic"

    @property
    def third(self) -> int:
        return self.b


def validate_biquadratic(q: int, k: int, r: int) -> BiquadraticSpec:
    """Validated parameter triple, or a rejection listing every violated hypothesis."""
    bad = []
    for name, p in (("q", q), ("k", k), ("r", r)):
        if p < 2 or not is_prime(p):
            bad.append("%s = %d is not prime" % (name, p))
            continue
        if p % 4 != 1:
            bad.append("%s = %d is not 1 mod 4" % (name, p))
        if p < 29:
            bad.append("%s = %d is below 29" % (name, p))
    if len({q, k, r}) != 3:
        bad.append("parameters %d, %d, %d are not distinct" % (q, k, r))
    if bad:
        raise HypothesisViolation(bad)
    return BiquadraticSpec(q=q, k=k, r=r)


def validate_cyclic(q: int, k: int, b: int) -> CyclicSpec:
    """Validated parameter triple, or a rejection listing every violated hypothesis."""
    bad = []
    for name, p in (("q", q), ("k", k)):
        if p < 2 or not is_prime(p):
            bad.append("%s = %d is not prime" % (name, p))
            continue
        if p % 4 != 1:
            bad.append("%s = %d is not 1 mod 4" % (name, p))
        if p < 17:
            bad.append("%s = %d is below 17" % (name, p))
    if q == k:
        bad.append("q and k must be distinct, both are %d" % q)
    if b <= 0 or b % 4 != 0:
        bad.append("b = %d is not a positive multiple of 4" % b)
    root = None
    if b > 0:
        rem = k - b * b
        if rem <= 0:
            bad.append("k - b^2 = %d is not positive" % rem)
        else:
            root = is_perfect_square(rem)
            if root is None:
                bad.append("k - b^2 = %d is not a perfect square" % rem)
    if bad:
        raise HypothesisViolation(bad)
    return CyclicSpec(q=q, k=k, b=b, root=root)


def conductor(spec) -> int:
    if isinstance(spec, BiquadraticSpec):
        return spec.q * spec.k * spec.r
    return spec.q * spec.k


def discriminant(spec) -> int:
    # conductor-discriminant product over the character group:
    # biquadratic characters have conductors 1, q, kr, qkr; cyclic 1, k, qk, qk
    if isinstance(spec, BiquadraticSpec):
        c = conductor(spec)
        return c * c
    return spec.q ** 2 * spec.k ** 3


def min_poly_K(spec) -> IntPoly:
    """Monic degree-4 polynomial of the standard generator of the quartic field."""
    if isinstance(spec, BiquadraticSpec):
        q, kr = spec.q, spec.k * spec.r
        return ((q - kr) ** 2, 0, -2 * (q + kr), 0, 1)
    q, k, b = spec.q, spec.k, spec.b
    return (q * q * k * (k - b * b), 0, -2 * q * k, 0, 1)


def min_poly_H(spec) -> IntPoly:
    """Monic degree-8 polynomial of the standard generator of the class field."""
    if isinstance(spec, BiquadraticSpec):
        q, k, r = spec.q, spec.k, spec.r
        s1, s2, s3 = q + k + r, q * k + q * r + k * r, q * k * r
        # in Y = y^2: ((Y - s1)^2 - 4 s2)^2 - 64 s3 Y
        inner = (s1 * s1 - 4 * s2, -2 * s1, 1)
        fy = poly_sub(poly_mul(inner, inner), (0, 64 * s3))
    else:
        # product of the two conjugate quadratics in Y = y^2 over Z[sqrt(k)]:
        #   (Y - (q + alpha))^2 - 4 q alpha = Y^2 - 2(q + alpha) Y + (q - alpha)^2
        # for alpha = k + b sqrt(k) and its conjugate; pairs (a, c) mean a + c sqrt(k)
        q, k, b = spec.q, spec.k, spec.b

        def mul(u, v):
            return (u[0] * v[0] + k * u[1] * v[1], u[0] * v[1] + u[1] * v[0])

        def quad(alpha):
            qa = (q - alpha[0], -alpha[1])
            return [mul(qa, qa), (-2 * (q + alpha[0]), -2 * alpha[1]), (1, 0)]

        fplus, fminus = quad((k, b)), quad((k, -b))
        prod = [(0, 0)] * 5
        for i, u in enumerate(fplus):
            for j, v in enumerate(fminus):
                w = mul(u, v)
                prod[i + j] = (prod[i + j][0] + w[0], prod[i + j][1] + w[1])
        assert all(c[1] == 0 for c in prod), "irrational part must cancel"
        fy = tuple(c[0] for c in prod)
    out = [0] * (2 * len(fy) - 1)
    out[::2] = fy
    return tuple(out)


@dataclass(frozen=True)
class HCFDescriptor:
    generators: tuple         # textual radical generators of the class field
    defining_poly: IntPoly
    galois_group: str         # Galois group over the rationals
    relative_degree: int      # degree of the class field over the quartic field


def hcf_descriptor(spec) -> HCFDescriptor:
    if isinstance(spec, BiquadraticSpec):
        gens = tuple("sqrt(%d)" % p for p in (spec.q, spec.k, spec.r))
        group = "(Z/2)^3"
    else:
        gens = ("sqrt(%d)" % spec.q, "sqrt(%d + %d*sqrt(%d))" % (spec.k, spec.b, spec.k))
        group = "Z/2 x Z/4"
    return HCFDescriptor(generators=gens, defining_poly=min_poly_H(spec),
                         galois_group=group, relative_degree=2)


@dataclass(frozen=True)
class FieldInvariants:
    conductor: int
    discriminant: int
    hcf: HCFDescriptor
    g: IntPoly
    f: IntPoly


def invariants(spec) -> FieldInvariants:
    return FieldInvariants(conductor=conductor(spec), discriminant=discriminant(spec),
                           hcf=hcf_descriptor(spec), g=min_poly_K(spec), f=min_poly_H(spec))


def is_irreducible_quartic(g: IntPoly) -> bool:
    """Exact irreducibility over Z for monic quartics with only even-degree terms.

    x^4 + A x^2 + B factors over Z iff either z^2 + A z + B has an integer
    root (two even quadratic factors, covering all linear factors too), or
    B = t^2 with 2t - A or -2t - A a perfect square (conjugate factors
    x^2 +- a x + t).
    """
    if len(g) != 5 or g[4] != 1 or g[1] != 0 or g[3] != 0:
        raise ValueError("expected a monic quartic with even-degree terms only")
    A, B = g[2], g[0]
    if is_perfect_square(A * A - 4 * B) is not None:
        return False
    t = is_perfect_square(B)
    if t is not None:
        if is_perfect_square(2 * t - A) is not None or is_perfect_square(-2 * t - A) is not None:
            return False
    return True
