"""Seeded construction of solved instances and near-miss mutants.

Every instance is a pure function of its :class:`GenSpec`.  Breakpoints and
endpoints are dyadic rationals (denominator 64 for the instance skeleton,
1024 for mutant cuts) inside ``bounds``; an endpoint of ``I1`` or ``I2`` is
replaced by an infinity with probability 0.2.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .checker import EquationInstance, required_zero_region
from .classifier import end_plateaus
from .interval import (
    NEG_INF,
    POS_INF,
    Interval,
    IntervalSet,
    Span,
    closed_interval,
    closure_within,
    half_sum,
    half_sum_set,
    interval,
    point,
)
from .piecewise import PiecewiseConstant

__all__ = [
    "CASES",
    "EXPECTED",
    "GenSpec",
    "GenerationError",
    "generate",
    "random_open_interval",
    "random_subinterval",
    "random_closed_set",
    "random_step_function",
    "make_manifest",
]

CASES = ("extremal", "two_sided", "one_constant", "mutant")
EXPECTED = {
    "extremal": "extremal",
    "two_sided": "two_sided",
    "one_constant": "one_constant",
    "mutant": "rejected",
}
GRID = 64
FINE_GRID = 1024
PALETTE = tuple(range(5))
UNBOUNDED_P = 0.2
DEGENERATE_P = 0.1
MAX_ATTEMPTS = 200


class GenerationError(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    case: str
    seed: int
    bounds: Interval = field(default_factory=lambda: closed_interval(-4, 4))
    max_pieces: int = 4

    def __post_init__(self):
        if self.case not in CASES:
            raise GenerationError(f"unknown case {self.case!r}; choose from {', '.join(CASES)}")
        if not 0 <= self.seed < 2**64:
            raise GenerationError("seed must be an unsigned 64-bit integer")
        if self.bounds.is_empty or not self.bounds.is_bounded or self.bounds.is_degenerate:
            raise GenerationError(f"bounds {self.bounds} must be bounded with positive length")
        min_pieces = 1 if self.case == "extremal" else 2
        if self.max_pieces < min_pieces:
            raise GenerationError(f"max_pieces must be at least {min_pieces} for {self.case}")


def _lattice_inside(rng: random.Random, span: Span, n: int, denom: int = GRID) -> list[Fraction]:
    """``n`` distinct sorted multiples of ``1/denom`` strictly inside a bounded span."""
    if span.is_empty or not span.is_bounded:
        raise GenerationError(f"cannot draw points from {span}")
    first = math.floor(span.lo.value * denom) + 1
    last = math.ceil(span.hi.value * denom) - 1
    count = last - first + 1
    if count < n:
        raise GenerationError(f"{span} holds only {max(count, 0)} grid points, need {n}")
    return [Fraction(first + k, denom) for k in sorted(rng.sample(range(count), n))]


def random_open_interval(
    rng: random.Random, bounds: Interval, unbounded_p: float = UNBOUNDED_P, min_length=Fraction(1, 2)
) -> Interval:
    """An open interval with endpoints in ``bounds``, each side possibly infinite."""
    for _ in range(MAX_ATTEMPTS):
        a, b = _lattice_inside(rng, bounds, 2)
        if b - a >= min_length:
            break
    else:
        raise GenerationError(f"bounds {bounds} too small for intervals of length {min_length}")
    lo = NEG_INF if rng.random() < unbounded_p else a
    hi = POS_INF if rng.random() < unbounded_p else b
    return interval(lo, hi)


def random_subinterval(
    rng: random.Random, span: Span, bounds: Interval, point_p: float = DEGENERATE_P
) -> Interval:
    """A nonempty subinterval of ``span`` (a single point with probability ``point_p``)."""
    window = span & bounds
    if rng.random() < point_p:
        return point(_lattice_inside(rng, window, 1, FINE_GRID)[0])
    a, b = _lattice_inside(rng, window, 2, FINE_GRID)
    lo_closed, hi_closed = rng.random() < 0.5, rng.random() < 0.5
    # occasionally run out to an end of the span
    if rng.random() < 0.15:
        a, lo_closed = span.lo, span.lo_closed
    if rng.random() < 0.15:
        b, hi_closed = span.hi, span.hi_closed
    return interval(a, b, lo_closed, hi_closed)


def _values(rng: random.Random, n: int, first=None, last=None, avoid_first=None, avoid_last=None):
    """``n`` values with no two neighbours equal, honouring the end constraints."""
    out = []
    for k in range(n):
        if k == 0 and first is not None:
            out.append(first)
            continue
        if k == n - 1 and last is not None:
            out.append(last)
            continue
        banned = set()
        if out:
            banned.add(out[-1])
        if k == 0 and avoid_first is not None:
            banned.add(avoid_first)
        if k == n - 1 and avoid_last is not None:
            banned.add(avoid_last)
        if k == n - 2 and last is not None:
            banned.add(last)
        out.append(rng.choice([v for v in PALETTE if v not in banned]))
    return out


def random_step_function(rng: random.Random, dom: Interval, bounds: Interval, values) -> PiecewiseConstant:
    breaks = _lattice_inside(rng, dom & bounds, len(values) - 1)
    return PiecewiseConstant(dom, breaks, values)


def random_closed_set(rng: random.Random, d: Interval, bounds: Interval, max_parts: int = 3) -> IntervalSet:
    """A random finite union of points and intervals, closed relative to ``d``."""
    parts = []
    for _ in range(rng.randint(0, max_parts)):
        kind = rng.random()
        if kind < 0.35:
            parts.append(point(_lattice_inside(rng, d & bounds, 1, FINE_GRID)[0]))
            continue
        a, b = _lattice_inside(rng, d & bounds, 2, FINE_GRID)
        lo, lc = (d.lo, False) if kind > 0.9 else (a, True)
        hi, hc = (d.hi, False) if 0.8 < kind <= 0.9 else (b, True)
        parts.append(interval(lo, hi, lc, hc))
    return closure_within(IntervalSet(parts), d)


def _with_margins(rng: random.Random, forced: IntervalSet, d: Interval, bounds: Interval) -> IntervalSet:
    zero = closure_within(forced, d)
    if rng.random() < 0.5:
        zero = zero | random_closed_set(rng, d, bounds, max_parts=2)
    return zero


def _pieces(rng: random.Random, spec: GenSpec, lo: int = 2) -> int:
    return rng.randint(lo, spec.max_pieces)


def _extremal(rng: random.Random, spec: GenSpec) -> EquationInstance:
    i1 = random_open_interval(rng, spec.bounds)
    i2 = random_open_interval(rng, spec.bounds)
    d = half_sum(i1, i2)
    if rng.random() < 0.5:
        f1 = random_step_function(rng, i1, spec.bounds, _values(rng, _pieces(rng, spec, 1)))
        f2 = random_step_function(rng, i2, spec.bounds, _values(rng, _pieces(rng, spec, 1)))
        return EquationInstance(i1, i2, IntervalSet([d]), f1, f2)
    lam = rng.choice(PALETTE)
    zero = random_closed_set(rng, d, spec.bounds)
    return EquationInstance(
        i1, i2, zero, PiecewiseConstant.constant(i1, lam), PiecewiseConstant.constant(i2, lam)
    )


def _two_sided(rng: random.Random, spec: GenSpec) -> EquationInstance:
    i1 = random_open_interval(rng, spec.bounds)
    i2 = random_open_interval(rng, spec.bounds)
    degenerate = rng.random() < DEGENERATE_P
    side = "both" if degenerate else rng.choice(["left", "right", "both"])
    lam = rng.choice(PALETTE) if side in ("left", "both") else None
    mu = rng.choice(PALETTE) if side in ("right", "both") else None
    if lam is not None and lam == mu:
        mu = rng.choice([v for v in PALETTE if v != lam])
    n1 = 2 if degenerate else _pieces(rng, spec)
    v1 = _values(rng, n1, first=lam, last=mu)
    n2 = _pieces(rng, spec)
    v2 = _values(
        rng,
        n2,
        first=lam,
        last=mu,
        avoid_first=v1[0] if lam is None else None,
        avoid_last=v1[-1] if mu is None else None,
    )
    f1 = random_step_function(rng, i1, spec.bounds, v1)
    f2 = random_step_function(rng, i2, spec.bounds, v2)
    d = half_sum(i1, i2)
    bare = EquationInstance(i1, i2, IntervalSet([d]), f1, f2)
    plateaus = end_plateaus(bare)
    forced = IntervalSet([half_sum(plateaus.k1, i2), half_sum(i1, plateaus.k2)])
    return bare.with_zero_set(_with_margins(rng, forced, d, spec.bounds))


def _one_constant(rng: random.Random, spec: GenSpec) -> EquationInstance:
    i1 = random_open_interval(rng, spec.bounds)
    i2 = random_open_interval(rng, spec.bounds)
    i = rng.choice([1, 2])
    # adjacent values differ, so two or more pieces make f_i non-constant
    vals = _values(rng, _pieces(rng, spec))
    lam = rng.choice(vals)
    ii, ij = (i1, i2) if i == 1 else (i2, i1)
    fi = random_step_function(rng, ii, spec.bounds, vals)
    fj = PiecewiseConstant.constant(ij, lam)
    f1, f2 = (fi, fj) if i == 1 else (fj, fi)
    d = half_sum(i1, i2)
    big_k = fi.level_components(lam).complement_within(ii)
    forced = half_sum_set(big_k, ij)
    return EquationInstance(i1, i2, _with_margins(rng, forced, d, spec.bounds), f1, f2)


def _mutant(rng: random.Random, spec: GenSpec) -> EquationInstance:
    base_case = rng.choice(["extremal", "two_sided", "one_constant"])
    base = _BUILDERS[base_case](rng, spec)
    region = required_zero_region(base.f1, base.f2)
    if region.is_empty:
        raise _Redraw
    part = rng.choice(region.parts)
    cut = random_subinterval(rng, part, spec.bounds, point_p=0.3)
    return base.with_zero_set(base.zero_set - IntervalSet([cut]))


class _Redraw(Exception):
    pass


_BUILDERS = {
    "extremal": _extremal,
    "two_sided": _two_sided,
    "one_constant": _one_constant,
    "mutant": _mutant,
}


def _acceptable(case: str, inst: EquationInstance) -> bool:
    whole = inst.zero_set == IntervalSet([inst.d])
    if case in ("two_sided", "one_constant"):
        # a zero set covering D would make the draw extremal
        return not whole
    return True


def generate(spec: GenSpec) -> EquationInstance:
    """Build the instance determined by ``spec``; redraws degenerate attempts."""
    rng = random.Random(spec.seed)
    builder = _BUILDERS[spec.case]
    last_error = None
    for _ in range(MAX_ATTEMPTS):
        try:
            inst = builder(rng, spec)
        except (_Redraw, GenerationError) as exc:
            last_error = exc
            continue
        if _acceptable(spec.case, inst):
            return inst
    raise GenerationError(
        f"no acceptable {spec.case} instance within {MAX_ATTEMPTS} draws"
        + (f" (last error: {last_error})" if last_error else "")
    )


def make_manifest(cases, seeds) -> dict:
    """A corpus manifest listing one generated entry per ``(case, seed)``."""
    return {
        "entries": [
            {"case": case, "seed": seed, "expect": EXPECTED[case]}
            for case in cases
            for seed in seeds
        ]
    }
