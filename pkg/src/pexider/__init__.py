"""Exact workbench for phi((x+y)/2) * (f1(x) - f2(y)) = 0 on I1 x I2."""

from .checker import (
    EquationInstance,
    Verdict,
    check_exact,
    check_grid,
    is_zero_set_closed,
    required_zero_region,
)
from .classifier import (
    Extremal,
    NotASolution,
    OneConstant,
    TwoSidedPlateaus,
    ZeroSetNotClosed,
    classify,
    explain,
    verify_classification,
)
from .generator import GenSpec, generate
from .interval import (
    EMPTY,
    NEG_INF,
    POS_INF,
    ExtReal,
    Interval,
    IntervalSet,
    closure_within,
    diameter,
    half_sum,
    interval,
    is_subset,
    parse_interval,
    parse_interval_set,
    point,
    reflect,
    reflect_set,
)
from .piecewise import PiecewiseConstant
from .serialize import dumps_instance, loads_instance

__version__ = "0.1.0"
