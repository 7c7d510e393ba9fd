"""Exact and brute-force checking of ``phi((x+y)/2) * (f1(x) - f2(y)) = 0``.

The equation only sees ``phi`` through its zero set, so an instance stores the
zero set instead of ``phi``.  :func:`check_exact` decides the equation with
interval algebra; :func:`check_grid` evaluates it literally on a lattice and
serves as an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .interval import (
    Interval,
    IntervalError,
    IntervalSet,
    Span,
    closed_interval,
    closure_within,
    diameter,
    half_sum,
    is_subset,
    point,
    reflect,
    sample_point,
)
from .piecewise import PiecewiseConstant

__all__ = [
    "EquationInstance",
    "InstanceError",
    "Verdict",
    "required_zero_region",
    "check_exact",
    "check_grid",
    "is_zero_set_closed",
    "default_window",
    "DEFAULT_STEP",
    "violates",
]

DEFAULT_STEP = Fraction(1, 64)


class InstanceError(ValueError):
    pass


@dataclass(frozen=True)
class EquationInstance:
    """Domains ``i1``, ``i2``, the zero set of ``phi`` and the two step functions."""

    i1: Interval
    i2: Interval
    zero_set: IntervalSet
    f1: PiecewiseConstant
    f2: PiecewiseConstant
    mixing_domain: Interval = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("i1", "i2"):
            dom = getattr(self, name)
            if dom.is_empty or not dom.is_open:
                raise InstanceError(f"{name} must be a nonempty open interval, got {dom}")
        if self.f1.domain != self.i1:
            raise InstanceError(f"f1 is defined on {self.f1.domain}, expected {self.i1}")
        if self.f2.domain != self.i2:
            raise InstanceError(f"f2 is defined on {self.f2.domain}, expected {self.i2}")
        if not isinstance(self.zero_set, IntervalSet):
            object.__setattr__(self, "zero_set", IntervalSet(self.zero_set))
        d = half_sum(self.i1, self.i2)
        if not is_subset(self.zero_set, d):
            raise InstanceError(f"zero set {self.zero_set} is not contained in D = {d}")
        object.__setattr__(self, "mixing_domain", d)

    @property
    def d(self) -> Interval:
        return self.mixing_domain

    def phi_vanishes(self, u) -> bool:
        return u in self.zero_set

    def with_zero_set(self, zero_set: IntervalSet) -> "EquationInstance":
        return EquationInstance(self.i1, self.i2, zero_set, self.f1, self.f2)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: tuple[Fraction, Fraction] | None = None

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ValueError("a witness is present exactly when the equation fails")


def required_zero_region(f1: PiecewiseConstant, f2: PiecewiseConstant) -> IntervalSet:
    """Midpoints ``(x+y)/2`` at which ``f1(x) != f2(y)`` for some ``x``, ``y``.

    The equation holds iff ``phi`` vanishes on this set.
    """
    return IntervalSet(
        half_sum(p, q)
        for p, v in f1.pieces
        for q, w in f2.pieces
        if v != w
    )


def _largest(parts) -> Interval:
    best = parts[0]
    for part in parts[1:]:
        if diameter(part) > diameter(best):
            best = part
    return best


def check_exact(inst: EquationInstance) -> Verdict:
    region = required_zero_region(inst.f1, inst.f2)
    if is_subset(region, inst.zero_set):
        return Verdict(True)
    uncovered = region - inst.zero_set
    u = sample_point(_largest(uncovered.parts))
    for p, v in inst.f1.pieces:
        for q, w in inst.f2.pieces:
            if v == w:
                continue
            xs = reflect(q, point(u), p)
            if xs.is_empty:
                continue
            x = sample_point(xs)
            return Verdict(False, (x, 2 * u - x))
    raise AssertionError(f"uncovered point {u} has no differing piece pair")


def is_zero_set_closed(inst: EquationInstance) -> bool:
    return closure_within(inst.zero_set, inst.d) == inst.zero_set


def default_window(inst: EquationInstance, pad=1) -> Interval:
    """Closed hull of every finite endpoint in the instance, padded by ``pad``."""
    ends = []
    for span in (inst.i1, inst.i2, *inst.zero_set.parts):
        ends += [e.value for e in (span.lo, span.hi) if e.is_finite]
    ends += list(inst.f1.breaks) + list(inst.f2.breaks)
    if not ends:
        return closed_interval(-pad, pad)
    return closed_interval(min(ends) - pad, max(ends) + pad)


def _lattice(span: Span, step: Fraction) -> tuple[int, int] | None:
    """Inclusive range of integers ``k`` with ``k * step`` in the bounded ``span``."""
    if span.is_empty:
        return None
    lo, hi = span.lo.value / step, span.hi.value / step
    k0 = math.ceil(lo)
    if k0 == lo and not span.lo_closed:
        k0 += 1
    k1 = math.floor(hi)
    if k1 == hi and not span.hi_closed:
        k1 -= 1
    return (k0, k1) if k0 <= k1 else None


def _lcm_denominators(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, v.denominator)
    return out


def check_grid(
    inst: EquationInstance,
    window: Span | None = None,
    step=DEFAULT_STEP,
    chunk: int = 512,
) -> Verdict:
    """Evaluate the equation at every lattice pair inside ``window``.

    Everything is rescaled to integers so the comparison is exact.  The first
    failing pair in ``(x, y)`` lexicographic order is returned as witness.
    Sound but incomplete: a violation between lattice points goes unseen.
    """
    step = Fraction(step)
    if step <= 0:
        raise InstanceError("grid step must be positive")
    if window is None:
        window = default_window(inst)
    if window.is_empty:
        return Verdict(True)
    if not window.is_bounded:
        raise InstanceError(f"grid window {window} must be bounded")
    r1 = _lattice(inst.i1 & window, step)
    r2 = _lattice(inst.i2 & window, step)
    if r1 is None or r2 is None:
        return Verdict(True)

    finite = [step]
    finite += list(inst.f1.breaks) + list(inst.f2.breaks)
    for part in inst.zero_set.parts:
        finite += [e.value for e in (part.lo, part.hi) if e.is_finite]
    scale = _lcm_denominators(finite)
    unit = int(step * scale)

    def scaled(q: Fraction) -> int:
        return int(q * scale)

    biggest = max(abs(scaled(q)) for q in finite) + unit * max(map(abs, (*r1, *r2)))
    dtype = np.int64 if 4 * biggest < 2**62 else object

    xs = np.arange(r1[0], r1[1] + 1, dtype=np.int64).astype(dtype) * unit
    ys = np.arange(r2[0], r2[1] + 1, dtype=np.int64).astype(dtype) * unit

    codes: dict[Fraction, int] = {}

    def coded(f: PiecewiseConstant, grid) -> np.ndarray:
        breaks = np.array([scaled(b) for b in f.breaks], dtype=dtype)
        vals = np.array([codes.setdefault(v, len(codes)) for v in f.values])
        if len(breaks) == 0:
            return np.full(len(grid), vals[0])
        return vals[np.searchsorted(breaks, grid, side="right")]

    c1 = coded(inst.f1, xs)
    c2 = coded(inst.f2, ys)

    bounds = []
    for part in inst.zero_set.parts:
        lo = None if not part.lo.is_finite else (2 * scaled(part.lo.value), part.lo_closed)
        hi = None if not part.hi.is_finite else (2 * scaled(part.hi.value), part.hi_closed)
        bounds.append((lo, hi))

    for start in range(0, len(xs), chunk):
        xb = xs[start:start + chunk]
        twice_mid = xb[:, None] + ys[None, :]
        vanishes = np.zeros(twice_mid.shape, dtype=bool)
        for lo, hi in bounds:
            inside = np.ones(twice_mid.shape, dtype=bool)
            if lo is not None:
                inside &= (twice_mid >= lo[0]) if lo[1] else (twice_mid > lo[0])
            if hi is not None:
                inside &= (twice_mid <= hi[0]) if hi[1] else (twice_mid < hi[0])
            vanishes |= inside
        bad = (c1[start:start + chunk, None] != c2[None, :]) & ~vanishes
        if bad.any():
            ix, iy = np.unravel_index(int(np.argmax(bad)), bad.shape)
            x = Fraction(int(xb[ix]), scale)
            y = Fraction(int(ys[iy]), scale)
            return Verdict(False, (x, y))
    return Verdict(True)


def violates(inst: EquationInstance, x, y) -> bool:
    """Direct pointwise evaluation: does the pair ``(x, y)`` break the equation?"""
    x, y = Fraction(x), Fraction(y)
    if x not in inst.i1 or y not in inst.i2:
        raise IntervalError(f"({x}, {y}) is outside I1 x I2")
    return (x + y) / 2 not in inst.zero_set and inst.f1(x) != inst.f2(y)

