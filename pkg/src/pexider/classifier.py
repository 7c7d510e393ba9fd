"""Sort solutions with a closed zero set into the three kinds of solutions.

For a solution whose zero set is closed in ``D`` exactly one description
applies:

* case (i), extremal: ``phi`` vanishes on all of ``D``, or ``f1`` and ``f2``
  are the same constant;
* case (ii), two-sided plateaus: neither function is constant, both have a
  common end plateau, and ``phi`` vanishes on ``(K1 + I2)/2 u (I1 + K2)/2``
  where ``K1``, ``K2`` are what remains after removing the end plateaus;
* case (iii), one constant: one function is the constant ``lam`` and ``phi``
  vanishes on ``(K + Ij)/2`` where ``K`` is the set on which the other
  function differs from ``lam``.

:func:`classify` computes the witnessing intervals and
:func:`verify_classification` re-checks them from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .checker import EquationInstance, check_exact, is_zero_set_closed
from .interval import (
    EMPTY,
    Interval,
    IntervalSet,
    Span,
    closure_within,
    half_sum,
    half_sum_set,
    interval,
    is_subset,
)

__all__ = [
    "Extremal",
    "TwoSidedPlateaus",
    "OneConstant",
    "NotASolution",
    "ZeroSetNotClosed",
    "Classification",
    "TheoremViolation",
    "classify",
    "end_plateaus",
    "verify_classification",
    "explain",
]


class TheoremViolation(RuntimeError):
    """A checked solution that fits none of the three cases.

    This cannot happen for a correct implementation; it signals a bug.
    """


@dataclass(frozen=True)
class Extremal:
    lam: Fraction | None = None
    case = "extremal"


@dataclass(frozen=True)
class TwoSidedPlateaus:
    lam: Fraction | None
    mu: Fraction | None
    u1: Span
    u2: Span
    v1: Span
    v2: Span
    k1: Interval
    k2: Interval
    case = "two_sided"


@dataclass(frozen=True)
class OneConstant:
    i: int
    lam: Fraction
    plateaus: IntervalSet
    big_k: IntervalSet
    case = "one_constant"


@dataclass(frozen=True)
class NotASolution:
    witness: tuple[Fraction, Fraction]
    case = "not_a_solution"


@dataclass(frozen=True)
class ZeroSetNotClosed:
    case = "zero_set_not_closed"


Classification = Union[Extremal, TwoSidedPlateaus, OneConstant, NotASolution, ZeroSetNotClosed]


def _single_part(s: IntervalSet) -> Span:
    if s.is_empty:
        return EMPTY
    if len(s) != 1:
        raise TheoremViolation(f"expected an interval, got {s}")
    return s.parts[0]


def end_plateaus(inst: EquationInstance) -> TwoSidedPlateaus:
    """Maximal common end plateaus of two non-constant functions.

    ``lam`` is the shared leftmost value and ``mu`` the shared rightmost
    value; a side whose end values differ gets empty ``U``/``V``.  The zero
    set of ``inst`` is not consulted.
    """
    f1, f2 = inst.f1, inst.f2
    lam = f1.values[0] if f1.values[0] == f2.values[0] else None
    mu = f1.values[-1] if f1.values[-1] == f2.values[-1] else None
    if lam is None:
        u1 = v1 = EMPTY
    else:
        u1 = interval(inst.i1.lo, f1.left_plateau_sup(lam))
        v1 = interval(inst.i2.lo, f2.left_plateau_sup(lam))
    if mu is None:
        u2 = v2 = EMPTY
    else:
        u2 = interval(f1.right_plateau_inf(mu), inst.i1.hi)
        v2 = interval(f2.right_plateau_inf(mu), inst.i2.hi)
    k1 = _single_part(IntervalSet([u1, u2]).complement_within(inst.i1))
    k2 = _single_part(IntervalSet([v1, v2]).complement_within(inst.i2))
    return TwoSidedPlateaus(lam, mu, u1, u2, v1, v2, k1, k2)


def classify(inst: EquationInstance) -> Classification:
    if not is_zero_set_closed(inst):
        return ZeroSetNotClosed()
    verdict = check_exact(inst)
    if not verdict.holds:
        return NotASolution(verdict.witness)

    c1, c2 = inst.f1.is_constant(), inst.f2.is_constant()
    same_constant = c1 is not None and c1 == c2
    whole = inst.zero_set == IntervalSet([inst.d])

    if inst.zero_set.has_empty_interior:
        # a solution whose zero set has empty interior must be extremal
        if not same_constant:
            raise TheoremViolation("solution with nowhere-dense zero set is not extremal")
        return Extremal(c1)
    if whole or same_constant:
        return Extremal(c1 if same_constant else None)

    if (c1 is None) != (c2 is None):
        i = 1 if c1 is None else 2
        lam = c2 if i == 1 else c1
        fi, ii = (inst.f1, inst.i1) if i == 1 else (inst.f2, inst.i2)
        plateaus = fi.level_components(lam)
        result: Classification = OneConstant(i, lam, plateaus, plateaus.complement_within(ii))
    elif c1 is None:
        result = end_plateaus(inst)
        if result.lam is None and result.mu is None:
            raise TheoremViolation("non-constant solution without a common end plateau")
    else:
        raise TheoremViolation(f"distinct constants {c1}, {c2} with zero set != D")

    if not verify_classification(inst, result):
        raise TheoremViolation(f"classification {result} does not verify")
    return result


def _open_within(u: Span, dom: Interval) -> bool:
    return u.is_empty or (u.is_open and u.issubset(dom))


def _on_level(f, part: Span, value) -> bool:
    if part.is_empty:
        return True
    return value is not None and is_subset(part, f.level_components(value))


def _verify_two_sided(inst: EquationInstance, c: TwoSidedPlateaus) -> bool:
    i1, i2 = inst.i1, inst.i2
    if not all(_open_within(u, i1) for u in (c.u1, c.u2)):
        return False
    if not all(_open_within(v, i2) for v in (c.v1, c.v2)):
        return False
    left = not c.u1.is_empty and not c.v1.is_empty and c.u1.lo == i1.lo and c.v1.lo == i2.lo
    right = not c.u2.is_empty and not c.v2.is_empty and c.u2.hi == i1.hi and c.v2.hi == i2.hi
    if not (left or right):
        return False
    if not (_on_level(inst.f1, c.u1, c.lam) and _on_level(inst.f2, c.v1, c.lam)):
        return False
    if not (_on_level(inst.f1, c.u2, c.mu) and _on_level(inst.f2, c.v2, c.mu)):
        return False
    for k, us, dom in ((c.k1, (c.u1, c.u2), i1), (c.k2, (c.v1, c.v2), i2)):
        if k.is_empty or k == dom:
            return False
        rest = IntervalSet(us).complement_within(dom)
        if rest != IntervalSet([k]) or closure_within(rest, dom) != rest:
            return False
    forced = IntervalSet([half_sum(c.k1, i2), half_sum(i1, c.k2)])
    return is_subset(forced, inst.zero_set)


def _verify_one_constant(inst: EquationInstance, c: OneConstant) -> bool:
    if c.i not in (1, 2):
        return False
    fi, ii, fj, ij = (
        (inst.f1, inst.i1, inst.f2, inst.i2) if c.i == 1 else (inst.f2, inst.i2, inst.f1, inst.i1)
    )
    if fj.is_constant() != c.lam:
        return False
    if c.plateaus.is_empty or not is_subset(c.plateaus, ii):
        return False
    if not is_subset(c.plateaus, fi.level_components(c.lam)):
        return False
    if c.big_k != c.plateaus.complement_within(ii):
        return False
    return is_subset(half_sum_set(c.big_k, ij), inst.zero_set)


def verify_classification(inst: EquationInstance, c: Classification) -> bool:
    """Independently re-check every property the classification claims."""
    if isinstance(c, Extremal):
        if c.lam is not None:
            return inst.f1.is_constant() == c.lam and inst.f2.is_constant() == c.lam
        return inst.zero_set == IntervalSet([inst.d])
    if isinstance(c, TwoSidedPlateaus):
        return _verify_two_sided(inst, c)
    if isinstance(c, OneConstant):
        return _verify_one_constant(inst, c)
    return False


def explain(inst: EquationInstance, c: Classification) -> str:
    """Plain-text report naming the clause that applies and its intervals."""
    lines = [f"I1 = {inst.i1}", f"I2 = {inst.i2}", f"D = {inst.d}", f"zero set = {inst.zero_set}"]
    if isinstance(c, ZeroSetNotClosed):
        lines.append("zero set is not closed in D: the trichotomy does not apply")
    elif isinstance(c, NotASolution):
        x, y = c.witness
        lines.append(f"not a solution: phi((x+y)/2) != 0 and f1(x) != f2(y) at x = {x}, y = {y}")
        lines.append(f"  f1({x}) = {inst.f1(x)}, f2({y}) = {inst.f2(y)}, midpoint {(x + y) / 2}")
    elif isinstance(c, Extremal):
        lines.append("case (i): extremal solution")
        if c.lam is not None:
            lines.append(f"  f1 = f2 = {c.lam} everywhere")
        else:
            lines.append("  phi vanishes on all of D")
    elif isinstance(c, TwoSidedPlateaus):
        lines.append("case (ii): common end plateaus of f1 and f2")
        lines.append(f"  lambda = {c.lam}: U1 = {c.u1}, V1 = {c.v1}")
        lines.append(f"  mu = {c.mu}: U2 = {c.u2}, V2 = {c.v2}")
        lines.append(f"  K1 = {c.k1}, K2 = {c.k2}")
        forced = IntervalSet([half_sum(c.k1, inst.i2), half_sum(inst.i1, c.k2)])
        lines.append(f"  phi must vanish on {forced}")
    elif isinstance(c, OneConstant):
        j = 3 - c.i
        lines.append(f"case (iii): f{j} = {c.lam} is constant")
        lines.append(f"  f{c.i} = {c.lam} on {c.plateaus}")
        lines.append(f"  K{c.i} = {c.big_k}")
        other = inst.i2 if c.i == 1 else inst.i1
        lines.append(f"  phi must vanish on {half_sum_set(c.big_k, other)}")
    return "\n".join(lines)
