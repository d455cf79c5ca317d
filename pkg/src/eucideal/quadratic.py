"""Invariants of real quadratic fields: discriminant, class number, fundamental unit.

Class numbers come from cycles of reduced indefinite binary quadratic forms;
fundamental units from the continued-fraction (PQa) expansion, normalized to
the half-integer Pell equation x^2 - D y^2 = +-4 so that D = 1 (mod 4) needs
no special casing.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .arith import is_squarefree
from .errors import InternalInconsistency


@dataclass(frozen=True)
class QuadraticFieldData:
    m: int                # squarefree radicand
    D: int                # fundamental discriminant
    h: int                # wide class number
    h_narrow: int
    eps: tuple            # (x, y): fundamental unit (x + y*sqrt(D))/2
    eps_norm: int         # +1 or -1


def fundamental_discriminant(m: int) -> int:
    """Fundamental discriminant (= conductor) of the real quadratic field of radicand m."""
    if m <= 1:
        raise ValueError("need a squarefree integer > 1, got %d" % m)
    if not is_squarefree(m):
        raise ValueError("%d is not squarefree" % m)
    return m if m % 4 == 1 else 4 * m


def _require_fundamental(D: int) -> None:
    ok = False
    if D > 0:
        if D % 4 == 1:
            ok = is_squarefree(D)
        elif D % 4 == 0:
            m = D // 4
            ok = m % 4 in (2, 3) and is_squarefree(m)
    if not ok:
        raise ValueError("%d is not a positive fundamental discriminant" % D)


@lru_cache(maxsize=None)
def fundamental_unit(D: int) -> tuple:
    """Minimal positive (x, y, norm) with x^2 - D y^2 = 4*norm, norm in {+1, -1}.

    PQa continued-fraction expansion of (P0 + sqrt(D))/2: the first index
    i >= 1 with |Q_i| = 2 yields the fundamental solution (G_{i-1}, B_{i-1}).
    All iterates are exact integers, so units with thousands of digits are fine.
    """
    _require_fundamental(D)
    s = isqrt(D)
    P, Q = D % 2, 2
    g_prev, g = -P, Q         # G_{-2}, G_{-1}
    b_prev, b = 1, 0          # B_{-2}, B_{-1}
    # period of the +-4 expansion is O(sqrt(D) log D); the guard never triggers
    for _ in range(20 * s + 200):
        a = (P + s + (1 if Q < 0 else 0)) // Q
        g_prev, g = g, a * g + g_prev
        b_prev, b = b, a * b + b_prev
        P = a * Q - P
        Q = (D - P * P) // Q
        if abs(Q) == 2:
            x, y = abs(g), abs(b)
            norm4 = x * x - D * y * y
            if norm4 not in (4, -4):
                raise InternalInconsistency("PQa terminated off the +-4 curve for D=%d" % D)
            return x, y, norm4 // 4
    raise InternalInconsistency("PQa did not terminate for D=%d" % D)


def _reduced_forms(D: int, s: int) -> list:
    # (a,b,c) with b^2-4ac = D is reduced iff 0 < b < sqrt(D) and
    # sqrt(D)-b < 2|a| < sqrt(D)+b; since sqrt(D) is irrational the bounds
    # become s-b+1 <= 2|a| <= s+b with s = isqrt(D).
    forms = []
    for b in range(2 - D % 2, s + 1, 2):
        if (D - b * b) % 4:
            continue
        m = (D - b * b) // 4
        for a in range(max(1, (s - b) // 2 + 1), (s + b) // 2 + 1):
            if m % a == 0:
                c = -(m // a)
                forms.append((a, b, c))
                forms.append((-a, b, -c))
    return forms


def _rho(form: tuple, D: int, s: int) -> tuple:
    # reduction step: next form has leading coefficient c and the unique
    # b' = -b (mod 2|c|) with s - 2|c| < b' <= s
    a, b, c = form
    t = 2 * abs(c)
    b2 = s - (s + b) % t
    return (c, b2, (b2 * b2 - D) // (4 * c))


@lru_cache(maxsize=None)
def class_number(D: int) -> tuple:
    """(h, h_narrow) for a positive fundamental discriminant D.

    h_narrow counts cycles of reduced indefinite forms of discriminant D;
    h follows from the norm of the fundamental unit.
    """
    _require_fundamental(D)
    s = isqrt(D)
    forms = _reduced_forms(D, s)
    pool = set(forms)
    seen = set()
    cycles = 0
    for start in forms:
        if start in seen:
            continue
        cycles += 1
        f = start
        while True:
            seen.add(f)
            f = _rho(f, D, s)
            if f not in pool:
                raise InternalInconsistency("rho left the reduced set at %r, D=%d" % (f, D))
            if f == start:
                break
    h_narrow = cycles
    if fundamental_unit(D)[2] == -1:
        h = h_narrow
    else:
        if h_narrow % 2:
            raise InternalInconsistency("odd narrow class number with norm +1 unit, D=%d" % D)
        h = h_narrow // 2
    return h, h_narrow


@lru_cache(maxsize=None)
def field_data(m: int) -> QuadraticFieldData:
    """All cached invariants of the real quadratic field of squarefree radicand m."""
    D = fundamental_discriminant(m)
    x, y, norm = fundamental_unit(D)
    h, h_narrow = class_number(D)
    return QuadraticFieldData(m=m, D=D, h=h, h_narrow=h_narrow, eps=(x, y), eps_norm=norm)
