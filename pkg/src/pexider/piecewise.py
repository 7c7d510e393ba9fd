"""Piecewise-constant functions with exact rational breakpoints and values.

A function on an open interval ``(lo, hi)`` is stored as an increasing tuple
of interior breakpoints ``b_1 < ... < b_n`` and ``n + 1`` values.  Breakpoints
belong to the piece on their right, so the pieces are::

    (lo, b_1), [b_1, b_2), ..., [b_n, hi)

Adjacent pieces with equal values are always merged, which makes the
representation canonical: two functions are equal iff they agree pointwise.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import Iterable, Sequence

from .interval import (
    NEG_INF,
    POS_INF,
    ExtReal,
    Interval,
    IntervalError,
    IntervalSet,
    Span,
    parse_interval,
    parse_rational,
)

__all__ = ["PiecewiseConstant", "PiecewiseError"]


class PiecewiseError(ValueError):
    pass


def _rational(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, str):
        return parse_rational(v)
    if isinstance(v, bool):
        raise PiecewiseError("booleans are not values")
    return Fraction(v)


class PiecewiseConstant:
    """A finitely piecewise-constant real function on an open interval."""

    __slots__ = ("domain", "breaks", "values")

    def __init__(self, domain: Span, breaks: Sequence = (), values: Sequence = (0,)):
        if domain.is_empty or not domain.is_open:
            raise PiecewiseError(f"domain must be a nonempty open interval, got {domain}")
        breaks = [_rational(b) for b in breaks]
        values = [_rational(v) for v in values]
        if len(values) != len(breaks) + 1:
            raise PiecewiseError(
                f"{len(breaks)} breakpoints need {len(breaks) + 1} values, got {len(values)}"
            )
        for b in breaks:
            if b not in domain:
                raise PiecewiseError(f"breakpoint {b} lies outside {domain}")
        if any(b1 >= b2 for b1, b2 in zip(breaks, breaks[1:])):
            raise PiecewiseError("breakpoints must be strictly increasing")
        kept_breaks: list[Fraction] = []
        kept_values = [values[0]]
        for b, v in zip(breaks, values[1:]):
            if v != kept_values[-1]:
                kept_breaks.append(b)
                kept_values.append(v)
        self.domain: Interval = domain
        self.breaks: tuple[Fraction, ...] = tuple(kept_breaks)
        self.values: tuple[Fraction, ...] = tuple(kept_values)

    @classmethod
    def constant(cls, domain: Span, value) -> "PiecewiseConstant":
        return cls(domain, (), (value,))

    @classmethod
    def from_pieces(cls, domain: Span, pieces: Iterable[tuple[Span, object]]) -> "PiecewiseConstant":
        """Build from explicit ``(piece, value)`` pairs.

        The pieces must tile the domain using the breakpoint-on-the-right
        convention; anything else is rejected.
        """
        pieces = list(pieces)
        if not pieces:
            raise PiecewiseError("at least one piece is required")
        breaks, values = [], []
        expected_lo, expected_closed = domain.lo, False
        for k, (piece, value) in enumerate(pieces):
            if piece.is_empty:
                raise PiecewiseError(f"piece {k} is empty")
            if piece.lo != expected_lo or piece.lo_closed != expected_closed:
                raise PiecewiseError(
                    f"piece {k} = {piece} does not start where the previous piece ended"
                )
            if piece.hi_closed:
                raise PiecewiseError(f"piece {k} = {piece} must be right-open")
            if k:
                breaks.append(piece.lo.value)
            values.append(_rational(value))
            expected_lo, expected_closed = piece.hi, True
        if expected_lo != domain.hi:
            raise PiecewiseError(f"pieces end at {expected_lo}, domain ends at {domain.hi}")
        return cls(domain, breaks, values)

    @property
    def pieces(self) -> tuple[tuple[Interval, Fraction], ...]:
        edges = [self.domain.lo, *map(ExtReal, self.breaks), self.domain.hi]
        out = []
        for k, v in enumerate(self.values):
            out.append((Interval(edges[k], edges[k + 1], k > 0, False), v))
        return tuple(out)

    def __call__(self, x) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x) -> Fraction:
        x = _rational(x)
        if x not in self.domain:
            raise PiecewiseError(f"{x} is outside the domain {self.domain}")
        return self.values[bisect_right(self.breaks, x)]

    def is_constant(self) -> Fraction | None:
        """The value of a constant function, ``None`` otherwise."""
        return self.values[0] if len(self.values) == 1 else None

    def left_plateau_sup(self, value) -> ExtReal:
        """Right end of the longest interval ``(inf domain, u)`` on which ``f == value``.

        ``-inf`` when ``f`` does not take ``value`` just right of the left end
        of its domain, ``sup domain`` when ``f`` is constantly ``value``.
        """
        value = _rational(value)
        if self.values[0] != value:
            return NEG_INF
        if len(self.values) == 1:
            return self.domain.hi
        return ExtReal(self.breaks[0])

    def right_plateau_inf(self, value) -> ExtReal:
        """Mirror of :meth:`left_plateau_sup` at the right end of the domain."""
        value = _rational(value)
        if self.values[-1] != value:
            return POS_INF
        if len(self.values) == 1:
            return self.domain.lo
        return ExtReal(self.breaks[-1])

    def level_components(self, value) -> IntervalSet:
        value = _rational(value)
        return IntervalSet(piece for piece, v in self.pieces if v == value)

    def range(self) -> frozenset[Fraction]:
        return frozenset(self.values)

    def restricted_constant(self, part: Span) -> Fraction | None:
        """The value of ``f`` on ``part`` if ``f`` is constant there."""
        if part.is_empty:
            return None
        part = part & self.domain
        if part.is_empty:
            return None
        seen = {v for piece, v in self.pieces if not (piece & part).is_empty}
        return seen.pop() if len(seen) == 1 else None

    def __eq__(self, other):
        if not isinstance(other, PiecewiseConstant):
            return NotImplemented
        return (self.domain, self.breaks, self.values) == (other.domain, other.breaks, other.values)

    def __hash__(self):
        return hash((self.domain, self.breaks, self.values))

    def __repr__(self):
        body = ", ".join(f"{p}->{v}" for p, v in self.pieces)
        return f"PiecewiseConstant({self.domain}: {body})"

    def to_json(self) -> list[dict]:
        return [{"piece": str(p), "value": _format_value(v)} for p, v in self.pieces]

    @classmethod
    def from_json(cls, domain: Span, items: list) -> "PiecewiseConstant":
        if not isinstance(items, list):
            raise PiecewiseError("a piecewise function is a list of {piece, value} objects")
        pieces = []
        for k, item in enumerate(items):
            if not isinstance(item, dict) or set(item) != {"piece", "value"}:
                raise PiecewiseError(f"entry {k} must have exactly the keys 'piece' and 'value'")
            try:
                pieces.append((parse_interval(item["piece"]), _rational(item["value"])))
            except (IntervalError, ValueError, TypeError) as exc:
                raise PiecewiseError(f"entry {k}: {exc}") from None
        return cls.from_pieces(domain, pieces)


def _format_value(v: Fraction) -> str | int:
    if v.denominator == 1:
        return v.numerator
    return f"{v.numerator}/{v.denominator}"
