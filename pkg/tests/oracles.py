"""Brute-force oracles used to freeze expected values and cross-check the algebra.

Everything is done on integer lattices (values scaled by ``N``) so that
membership decisions are exact.  None of these helpers call the interval
operations they are used to check; they only read endpoints and flags.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def membership(span, ints: np.ndarray, n: int) -> np.ndarray:
    """Mask of ``ints / n`` lying in ``span`` (an Interval or EMPTY)."""
    if span.is_empty:
        return np.zeros(ints.shape, dtype=bool)
    out = np.ones(ints.shape, dtype=bool)
    if span.lo.is_finite:
        lo = span.lo.value * n
        assert lo.denominator == 1, "endpoint off the lattice"
        out &= ints >= int(lo) if span.lo_closed else ints > int(lo)
    if span.hi.is_finite:
        hi = span.hi.value * n
        assert hi.denominator == 1, "endpoint off the lattice"
        out &= ints <= int(hi) if span.hi_closed else ints < int(hi)
    return out


def set_membership(parts, ints: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros(ints.shape, dtype=bool)
    for part in parts:
        out |= membership(part, ints, n)
    return out


def lattice(lo, hi, n: int) -> np.ndarray:
    """Integers ``k`` with ``lo <= k/n <= hi``."""
    return np.arange(int(Fraction(lo) * n), int(Fraction(hi) * n) + 1, dtype=np.int64)


def reflect_members(s, p, q, zs: np.ndarray, n: int, search=(-24, 24), fine: int = 4) -> np.ndarray:
    """Mask of ``z = zs/n`` in ``(2p - s) & q`` by searching centres ``c`` with ``2c - z`` in ``s``.

    Centres run over the lattice ``1/(fine*n)`` inside ``search``.  If all
    endpoints are multiples of ``1/n`` then the feasible centres form an
    interval with endpoints on ``1/(2n)``, whose midpoint lies on
    ``1/(4n)``; the default ``fine=4`` therefore makes the search exact.
    """
    m = fine * n
    centres = lattice(search[0], search[1], m)
    centres = centres[membership(p, centres, m)]
    in_q = membership(q, zs, n)
    out = np.zeros(zs.shape, dtype=bool)
    for k in np.nonzero(in_q)[0]:
        mirrored = 2 * centres - zs[k] * fine
        if membership(s, mirrored, m).any():
            out[k] = True
    return out


def half_sum_members(a, b, us: np.ndarray, n: int, search=(-24, 24), fine: int = 4) -> np.ndarray:
    """Mask of ``u = us/n`` in ``(a + b)/2``: some ``x`` in ``a`` with ``2u - x`` in ``b``."""
    m = fine * n
    xs = lattice(search[0], search[1], m)
    xs = xs[membership(a, xs, m)]
    out = np.zeros(us.shape, dtype=bool)
    for k, u in enumerate(us):
        if membership(b, 2 * u * fine - xs, m).any():
            out[k] = True
    return out


def hull_of_mask(mask: np.ndarray, ints: np.ndarray, n: int):
    """``(min, max)`` of the lattice points selected by ``mask``, or ``None``."""
    if not mask.any():
        return None
    sel = ints[mask]
    return Fraction(int(sel.min()), n), Fraction(int(sel.max()), n)


def missing_limit_points(parts, ambient, n: int) -> set[Fraction]:
    """Points of ``ambient`` outside the union that are limits of member sequences.

    Only endpoints can be such points.  A sequence approaching an endpoint from
    inside a part of positive length converges to it; we confirm membership
    of ``endpoint +- 1/(n*2**j)`` along the way.
    """
    out = set()
    for part in parts:
        for end, sign in ((part.lo, 1), (part.hi, -1)):
            if not end.is_finite or part.lo == part.hi:
                continue
            e = end.value
            approaches = [e + sign * Fraction(1, n * 2**j) for j in range(1, 8)]
            member = any(e in other for other in parts)
            if all(x in part for x in approaches) and e in ambient and not member:
                out.add(e)
    return out
