"""Random instance families shared by the property and acceptance tests."""

from __future__ import annotations

import random

from pexider.checker import EquationInstance, required_zero_region
from pexider.generator import (
    random_closed_set,
    random_open_interval,
    random_step_function,
    random_subinterval,
)
from pexider.interval import IntervalSet, closed_interval, closure_within, half_sum, point
from pexider.piecewise import PiecewiseConstant

BOUNDS = closed_interval(-3, 3)


def _values(rng, n):
    out = [rng.randrange(4)]
    while len(out) < n:
        out.append(rng.choice([v for v in range(4) if v != out[-1]]))
    return out


def random_functions(rng: random.Random, unbounded_p=0.0, max_pieces=4):
    i1 = random_open_interval(rng, BOUNDS, unbounded_p)
    i2 = random_open_interval(rng, BOUNDS, unbounded_p)
    f1 = random_step_function(rng, i1, BOUNDS, _values(rng, rng.randint(1, max_pieces)))
    f2 = random_step_function(rng, i2, BOUNDS, _values(rng, rng.randint(1, max_pieces)))
    return i1, i2, f1, f2


def random_bounded_instance(rng: random.Random) -> EquationInstance:
    """Bounded domains; a third each of covering, punctured and unrelated zero sets."""
    i1, i2, f1, f2 = random_functions(rng)
    d = half_sum(i1, i2)
    region = required_zero_region(f1, f2)
    kind = rng.randrange(3)
    if kind == 0 or region.is_empty:
        zero = closure_within(region, d) | random_closed_set(rng, d, BOUNDS, 1)
    elif kind == 1:
        cut = random_subinterval(rng, rng.choice(region.parts), BOUNDS, point_p=0.3)
        zero = region - IntervalSet([cut])
    else:
        zero = random_closed_set(rng, d, BOUNDS)
    return EquationInstance(i1, i2, zero, f1, f2)


def random_point_zero_set(rng: random.Random, d, max_points=4) -> IntervalSet:
    pts = set()
    for _ in range(rng.randint(0, max_points)):
        lo = d.lo.value if d.lo.is_finite else -3
        hi = d.hi.value if d.hi.is_finite else 3
        k = rng.randint(1, 63)
        pts.add(lo + (hi - lo) * k / 64)
    return IntervalSet(point(p) for p in pts)


def random_nowhere_dense_instance(rng: random.Random) -> EquationInstance:
    """Zero set a finite point set; f's extremal about a third of the time."""
    i1, i2, f1, f2 = random_functions(rng, unbounded_p=0.2)
    if rng.random() < 0.35:
        lam = rng.randrange(4)
        f1 = PiecewiseConstant.constant(i1, lam)
        f2 = PiecewiseConstant.constant(i2, lam)
    d = half_sum(i1, i2)
    return EquationInstance(i1, i2, random_point_zero_set(rng, d), f1, f2)


def symmetric_instance(rng: random.Random) -> EquationInstance:
    """I1 = I2 and f1 = f2, with the required region closed up plus a margin."""
    i, _, f, _ = random_functions(rng, unbounded_p=0.2)
    region = required_zero_region(f, f)
    zero = closure_within(region, i) | random_closed_set(rng, i, BOUNDS, 1)
    return EquationInstance(i, i, zero, f, f)
