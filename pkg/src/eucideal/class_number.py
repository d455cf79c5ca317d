"""Class number of the biquadratic family via the Kuroda/Kubota product formula.

h_K = (Q/4) * h1 * h2 * h3 over the three quadratic subfields, where the unit
index Q = 2^rank is fixed by exact square tests of +-e1^a e2^b e3^c in the
quartic field.  Square testing reconstructs a candidate root from embedding
numerics and then verifies it in exact rational arithmetic, so both presence
and absence are certified.

Class numbers for the cyclic family are ingested from a fixture file
(family,q,k,b_or_r,h records); the package ships one as package data.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import mpmath

from .errors import InternalInconsistency, UnknownClassNumber
from .fields import BiquadraticSpec, CyclicSpec
from .quadratic import QuadraticFieldData, field_data

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class KElement:
    """c0 + c1 sqrt(q) + c2 sqrt(kr) + c3 sqrt(qkr) with rational coordinates."""

    coords: tuple      # four Fractions
    spec: BiquadraticSpec


def k_element(spec: BiquadraticSpec, c0=0, c1=0, c2=0, c3=0) -> KElement:
    return KElement(tuple(Fraction(c) for c in (c0, c1, c2, c3)), spec)


def k_mul(x: KElement, y: KElement) -> KElement:
    q = x.spec.q
    kr = x.spec.k * x.spec.r
    qkr = q * kr
    a0, a1, a2, a3 = x.coords
    b0, b1, b2, b3 = y.coords
    return KElement((
        a0 * b0 + q * a1 * b1 + kr * a2 * b2 + qkr * a3 * b3,
        a0 * b1 + a1 * b0 + kr * (a2 * b3 + a3 * b2),
        a0 * b2 + a2 * b0 + q * (a1 * b3 + a3 * b1),
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
    ), x.spec)


def k_neg(x: KElement) -> KElement:
    return KElement(tuple(-c for c in x.coords), x.spec)


_SIGNS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def _embed_all(x: KElement, prec: int) -> list:
    """The four real embeddings of x, as mpf values at the given precision."""
    q, kr = x.spec.q, x.spec.k * x.spec.r
    with mpmath.workprec(prec):
        rq, rkr = mpmath.sqrt(q), mpmath.sqrt(kr)
        rqkr = rq * rkr
        vals = []
        for s1, s2 in _SIGNS:
            acc = mpmath.mpf(0)
            for c, rad in zip(x.coords, (mpmath.mpf(1), s1 * rq, s2 * rkr, s1 * s2 * rqkr)):
                acc += mpmath.mpf(c.numerator) / c.denominator * rad
            vals.append(acc)
        return vals


def _height_bits(x: KElement) -> int:
    # upper bound on log2 of the largest embedding magnitude
    coord = max(abs(c.numerator).bit_length() + c.denominator.bit_length() for c in x.coords)
    return coord + (x.spec.q * x.spec.k * x.spec.r).bit_length() + 8


def _embedding_signs(x: KElement) -> list:
    """Certified signs of the four embeddings of a nonzero integral element.

    A first pass at moderate precision decides clear cases; the fallback
    exceeds four times the height bound.  A nonzero algebraic integer cannot
    sit closer to zero than the reciprocal of its conjugates' product, so the
    fallback always separates every embedding from zero.
    """
    h = _height_bits(x)
    for prec in (h + 64, 4 * h + 128):
        vals = _embed_all(x, prec)
        err = mpmath.mpf(2) ** (max(mpmath.mag(v) for v in vals) - prec + 8)
        if all(abs(v) > 4 * err for v in vals):
            return [1 if v > 0 else -1 for v in vals]
    raise InternalInconsistency("could not certify embedding signs for %r" % (x,))


def is_square_in_K(delta: KElement):
    """A root x with x*x == delta, verified exactly, or None (certified absence).

    Roots of integral elements are integral, so their coordinates lie on the
    quarter-integer grid; the reconstruction rounds embedding data onto that
    grid and accepts only candidates that verify exactly.  An eighth-integer
    grid is tried defensively (with a logged warning) before declaring
    absence.
    """
    if all(c == 0 for c in delta.coords):
        raise ValueError("zero has no meaningful square test here")
    if any(s < 0 for s in _embedding_signs(delta)):
        return None    # not totally positive, so never a square in a totally real field
    q, kr = delta.spec.q, delta.spec.k * delta.spec.r
    # the smallest embedding can be as small as the reciprocal of the largest
    # cubed, and its square root still needs absolute accuracy ~2^-10, so the
    # working precision scales with three halves of the height in the worst
    # case; triple the height bound covers that with room to spare
    prec = 3 * _height_bits(delta) + 128
    for attempt in range(2):
        with mpmath.workprec(prec):
            w = [mpmath.sqrt(v) for v in _embed_all(delta, prec)]
            rq, rkr = mpmath.sqrt(q), mpmath.sqrt(kr)
            rqkr = rq * rkr
            suspicious = False
            for den in (4, 8):
                for pattern in range(8):
                    signs = (1, 1 - 2 * (pattern & 1), 1 - 2 * (pattern >> 1 & 1),
                             1 - 2 * (pattern >> 2 & 1))
                    v = [s * wi for s, wi in zip((signs[0], signs[1], signs[2], signs[3]), w)]
                    # invert the embedding matrix over the radical basis
                    d = (
                        (v[0] + v[1] + v[2] + v[3]) / 4,
                        (v[0] + v[1] - v[2] - v[3]) / (4 * rq),
                        (v[0] - v[1] + v[2] - v[3]) / (4 * rkr),
                        (v[0] - v[1] - v[2] + v[3]) / (4 * rqkr),
                    )
                    coords = []
                    for dj in d:
                        nearest = mpmath.nint(den * dj)
                        offset = abs(den * dj - nearest)
                        if offset > mpmath.mpf("0.25"):
                            if offset < mpmath.mpf("0.75"):
                                suspicious = True
                            break
                        coords.append(Fraction(int(nearest), den))
                    else:
                        cand = KElement(tuple(coords), delta.spec)
                        if k_mul(cand, cand).coords == delta.coords:
                            if den == 8:
                                # integral elements should sit on the quarter grid
                                log.warning("root of %r only found on the eighth grid", delta)
                            return cand
        if not suspicious:
            break
        prec *= 2    # rounding was ambiguous somewhere; retry once, sharper
    return None


def subfield_data(spec: BiquadraticSpec) -> tuple:
    """QuadraticFieldData for the three quadratic subfields (radicands q, kr, qkr)."""
    return (field_data(spec.q), field_data(spec.k * spec.r),
            field_data(spec.q * spec.k * spec.r))


def _unit_as_element(spec: BiquadraticSpec, data: QuadraticFieldData, axis: int) -> KElement:
    # (x + y sqrt(D))/2 placed on the given radical axis; D = 1 mod 4 here, so
    # the fundamental discriminant is the radicand itself
    x, y = data.eps
    coords = [Fraction(x, 2), 0, 0, 0]
    coords[axis] = Fraction(y, 2)
    return KElement(tuple(Fraction(c) for c in coords), spec)


@dataclass(frozen=True)
class UnitIndexResult:
    Q: int             # 2**rank
    square_set: tuple  # exponent triples (a, b, c) whose +-unit product is a square
    rank: int


def unit_index(spec: BiquadraticSpec) -> UnitIndexResult:
    """Index of the subfield-unit subgroup, via square tests of +-e1^a e2^b e3^c."""
    d1, d2, d3 = subfield_data(spec)
    e1 = _unit_as_element(spec, d1, 1)
    e2 = _unit_as_element(spec, d2, 2)
    e3 = _unit_as_element(spec, d3, 3)
    witnessed = []
    for mask in range(1, 8):
        prod = k_element(spec, 1)
        for bit, e in ((4, e1), (2, e2), (1, e3)):
            if mask & bit:
                prod = k_mul(prod, e)
        if is_square_in_K(prod) is not None or is_square_in_K(k_neg(prod)) is not None:
            witnessed.append(mask)
    span = {0}
    for m in witnessed:
        span |= {m ^ v for v in span}
    if span != set(witnessed) | {0}:
        raise InternalInconsistency("witnessed square set is not subgroup-closed: %r" % witnessed)
    rank = len(span).bit_length() - 1
    triples = tuple(sorted((m >> 2 & 1, m >> 1 & 1, m & 1) for m in witnessed))
    return UnitIndexResult(Q=2 ** rank, square_set=triples, rank=rank)


def class_number_biquadratic(spec: BiquadraticSpec) -> int:
    """Class number by the Kuroda/Kubota product formula."""
    d1, d2, d3 = subfield_data(spec)
    numerator = unit_index(spec).Q * d1.h * d2.h * d3.h
    if numerator % 4:
        raise InternalInconsistency(
            "Q*h1*h2*h3 = %d is not divisible by 4 for %r" % (numerator, spec))
    return numerator // 4


def load_fixture(path=None) -> dict:
    """Class-number fixture: {(q, k, b): h} parsed from family,q,k,b_or_r,h lines."""
    if path is None:
        text = resources.files("eucideal").joinpath("data/cyclic_class_numbers.csv").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    table = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",")
        if len(parts) != 5 or parts[0] != "cyclic":
            raise ValueError("fixture line %d is malformed: %r" % (lineno, line))
        q, k, b, h = (int(p) for p in parts[1:])
        table[(q, k, b)] = h
    return table


def class_number_cyclic(spec: CyclicSpec, fixture: dict) -> int:
    """Externally computed class number for the cyclic family, from the fixture."""
    try:
        return fixture[(spec.q, spec.k, spec.b)]
    except KeyError:
        raise UnknownClassNumber(
            "no fixture entry for (q, k, b) = (%d, %d, %d)" % (spec.q, spec.k, spec.b)) from None
