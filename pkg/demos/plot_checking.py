"""
Checking a candidate solution
=============================

The equation ``phi((x+y)/2) * (f1(x) - f2(y)) = 0`` only sees ``phi``
through its zero set.  For step functions it holds exactly when every
midpoint of two pieces carrying different values is a zero of ``phi``.
"""

from fractions import Fraction

from pexider import (
    EquationInstance,
    PiecewiseConstant,
    check_exact,
    check_grid,
    parse_interval,
    parse_interval_set,
    required_zero_region,
)

P = parse_interval
f1 = PiecewiseConstant.from_pieces(P("(0,2)"), [(P("(0,1)"), 1), (P("[1,2)"), 7)])
f2 = PiecewiseConstant.constant(P("(4,6)"), 1)

region = required_zero_region(f1, f2)
print("phi has to vanish on", region)

good = EquationInstance(P("(0,2)"), P("(4,6)"), parse_interval_set(["[5/2,4)"]), f1, f2)
print("zero set [5/2,4):", check_exact(good))

# a zero set that misses part of the region fails with a concrete pair
bad = good.with_zero_set(parse_interval_set(["(3,4)"]))
verdict = check_exact(bad)
x, y = verdict.witness
print("zero set (3,4):  ", verdict)
print(f"  f1({x}) = {f1(x)}, f2({y}) = {f2(y)}, midpoint {(x + y) / 2} is not a zero")

# the brute-force grid agrees
print("grid, step 1/64: ", check_grid(bad, P("[-1,7]"), Fraction(1, 64)))
