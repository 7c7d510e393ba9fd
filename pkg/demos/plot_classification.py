"""
Sorting solutions into the three cases
======================================

Once the zero set is closed in ``D``, every solution is extremal, has
matching end plateaus on both functions, or has one constant function
that the other one equals away from a forced zero region.
"""

from pexider import (
    EquationInstance,
    PiecewiseConstant,
    classify,
    explain,
    parse_interval,
    parse_interval_set,
)

P = parse_interval


def pw(domain, *pieces):
    return PiecewiseConstant.from_pieces(P(domain), [(P(p), v) for p, v in pieces])


examples = {
    "one constant": EquationInstance(
        P("(0,2)"), P("(4,6)"), parse_interval_set(["[5/2,4)"]),
        pw("(0,2)", ("(0,1)", 1), ("[1,2)", 7)),
        PiecewiseConstant.constant(P("(4,6)"), 1),
    ),
    "end plateaus": EquationInstance(
        P("(0,4)"), P("(0,4)"), parse_interval_set(["[1/2,4)"]),
        pw("(0,4)", ("(0,1)", 3), ("[1,4)", 9)),
        pw("(0,4)", ("(0,1)", 3), ("[1,4)", 9)),
    ),
    "whole zero set": EquationInstance(
        P("(0,2)"), P("(4,6)"), parse_interval_set(["(2,4)"]),
        pw("(0,2)", ("(0,1)", 1), ("[1,2)", 7)),
        pw("(4,6)", ("(4,5)", 0), ("[5,6)", 3)),
    ),
    "not closed": EquationInstance(
        P("(0,2)"), P("(4,6)"), parse_interval_set(["(5/2,3)", "(3,4)"]),
        pw("(0,2)", ("(0,1)", 1), ("[1,2)", 7)),
        PiecewiseConstant.constant(P("(4,6)"), 1),
    ),
}

for name, inst in examples.items():
    print(f"--- {name}")
    print(explain(inst, classify(inst)))
