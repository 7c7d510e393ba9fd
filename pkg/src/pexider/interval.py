"""Exact extended-real intervals and finite unions of intervals.

Endpoints are :class:`fractions.Fraction` values or the two infinities, wrapped
in :class:`ExtReal`.  Every interval keeps independent open/closed flags, and
the empty interval is the singleton :data:`EMPTY` rather than a pair of
inverted endpoints.

The main operations are the reflection ``reflect(s, p, q) = (2p - s) & q``, the
Minkowski mean ``half_sum(a, b) = (a + b) / 2`` and the closure of a set
relative to an open interval.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "ExtReal",
    "NEG_INF",
    "POS_INF",
    "Interval",
    "Empty",
    "EMPTY",
    "Span",
    "IntervalSet",
    "interval",
    "point",
    "open_interval",
    "closed_interval",
    "reflect",
    "reflect_set",
    "half_sum",
    "half_sum_set",
    "diameter",
    "closure_within",
    "is_closed_within",
    "is_subset",
    "parse_rational",
    "parse_interval",
    "parse_interval_set",
    "IntervalError",
    "format_rational",
    "sample_point",
]

Rational = Union[Fraction, int]


class IntervalError(ValueError):
    """Raised for malformed intervals and undefined extended-real arithmetic."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        # exact binary expansion, never a rounded decimal
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


@total_ordering
@dataclass(frozen=True)
class ExtReal:
    """An extended real: a finite rational, ``-inf`` or ``+inf``.

    ``inf`` is ``0`` for finite values and ``-1``/``+1`` for the infinities, in
    which case ``value`` is ``None``.
    """

    value: Fraction | None
    inf: int = 0

    def __post_init__(self):
        if self.inf not in (-1, 0, 1):
            raise IntervalError(f"bad infinity sign {self.inf}")
        if self.inf == 0:
            if self.value is None:
                raise IntervalError("finite ExtReal needs a value")
            if not isinstance(self.value, Fraction):
                object.__setattr__(self, "value", _as_fraction(self.value))
        elif self.value is not None:
            raise IntervalError("infinite ExtReal carries no value")

    @classmethod
    def of(cls, x) -> "ExtReal":
        if isinstance(x, ExtReal):
            return x
        if isinstance(x, float) and x in (float("inf"), float("-inf")):
            return POS_INF if x > 0 else NEG_INF
        return cls(_as_fraction(x))

    @property
    def is_finite(self) -> bool:
        return self.inf == 0

    def _key(self):
        return (self.inf, self.value if self.inf == 0 else 0)

    def __eq__(self, other):
        if not isinstance(other, ExtReal):
            try:
                other = ExtReal.of(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        other = ExtReal.of(other)
        return self._key() < other._key()

    def __neg__(self) -> "ExtReal":
        if self.inf:
            return ExtReal(None, -self.inf)
        return ExtReal(-self.value)

    def __add__(self, other) -> "ExtReal":
        other = ExtReal.of(other)
        if self.inf and other.inf and self.inf != other.inf:
            raise IntervalError("(+inf) + (-inf) is undefined")
        if self.inf:
            return self
        if other.inf:
            return other
        return ExtReal(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other) -> "ExtReal":
        return self + (-ExtReal.of(other))

    def __rsub__(self, other) -> "ExtReal":
        return ExtReal.of(other) + (-self)

    def scale(self, k: Rational) -> "ExtReal":
        """Multiply by a positive rational."""
        k = _as_fraction(k)
        if k <= 0:
            raise IntervalError("scale factor must be positive")
        if self.inf:
            return self
        return ExtReal(self.value * k)

    def half(self) -> "ExtReal":
        return self.scale(Fraction(1, 2))

    def twice(self) -> "ExtReal":
        return self.scale(2)

    def __str__(self):
        if self.inf:
            return "+inf" if self.inf > 0 else "-inf"
        return format_rational(self.value)

    def __repr__(self):
        return f"ExtReal({self})"


NEG_INF = ExtReal(None, -1)
POS_INF = ExtReal(None, 1)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q``, an integer or a decimal literal into an exact Fraction."""
    m = _RATIONAL_RE.match(text)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise IntervalError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), den)
    try:
        # Fraction("0.1") is exactly 1/10
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise IntervalError(f"not a rational literal: {text!r}") from None


class Empty:
    """The empty interval.  Use the module singleton :data:`EMPTY`."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    is_empty = True
    is_open = True
    is_degenerate = False
    is_bounded = True

    def __contains__(self, x) -> bool:
        return False

    def __and__(self, other) -> "Empty":
        return self

    def issubset(self, other) -> bool:
        return True

    def __eq__(self, other):
        return isinstance(other, Empty)

    def __hash__(self):
        return hash("empty")

    def __str__(self):
        return "empty"

    def __repr__(self):
        return "EMPTY"

    def __reduce__(self):
        return (Empty, ())


EMPTY = Empty()


@dataclass(frozen=True)
class Interval:
    """A nonempty interval with exact endpoints and closedness flags.

    A degenerate interval ``[p,p]`` is allowed and must be closed on both
    sides.  Infinite endpoints are always open.  Invalid combinations raise
    :class:`IntervalError`; use :func:`interval` to get :data:`EMPTY` instead.
    """

    lo: ExtReal
    hi: ExtReal
    lo_closed: bool = False
    hi_closed: bool = False

    is_empty = False

    def __post_init__(self):
        object.__setattr__(self, "lo", ExtReal.of(self.lo))
        object.__setattr__(self, "hi", ExtReal.of(self.hi))
        lo, hi = self.lo, self.hi
        if lo.inf == 1 or hi.inf == -1:
            raise IntervalError(f"endpoint order impossible: {lo}, {hi}")
        if (self.lo_closed and not lo.is_finite) or (self.hi_closed and not hi.is_finite):
            raise IntervalError("an infinite endpoint cannot be closed")
        if hi < lo:
            raise IntervalError(f"lo > hi in interval ({lo}, {hi})")
        if lo == hi and not (self.lo_closed and self.hi_closed):
            raise IntervalError(f"degenerate interval at {lo} must be closed on both sides")

    @property
    def is_open(self) -> bool:
        return not self.lo_closed and not self.hi_closed

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    @property
    def is_bounded(self) -> bool:
        return self.lo.is_finite and self.hi.is_finite

    def __contains__(self, x) -> bool:
        x = ExtReal.of(x)
        if not x.is_finite:
            return False
        if x < self.lo or (x == self.lo and not self.lo_closed):
            return False
        if x > self.hi or (x == self.hi and not self.hi_closed):
            return False
        return True

    def __and__(self, other: "Span") -> "Span":
        if other.is_empty:
            return EMPTY
        lo, lc = _max_lower(self.lo, self.lo_closed, other.lo, other.lo_closed)
        hi, hc = _min_upper(self.hi, self.hi_closed, other.hi, other.hi_closed)
        return interval(lo, hi, lc, hc)

    def issubset(self, other: "Span") -> bool:
        if other.is_empty:
            return False
        if self.lo < other.lo or (self.lo == other.lo and self.lo_closed and not other.lo_closed):
            return False
        if self.hi > other.hi or (self.hi == other.hi and self.hi_closed and not other.hi_closed):
            return False
        return True

    def __str__(self):
        if self.is_degenerate:
            return f"[{self.lo},{self.hi}]"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo},{self.hi}{right}"

    def __repr__(self):
        return f"Interval({self})"


Span = Union[Interval, Empty]


def _max_lower(a: ExtReal, ac: bool, b: ExtReal, bc: bool):
    if a > b:
        return a, ac
    if b > a:
        return b, bc
    return a, ac and bc


def _min_upper(a: ExtReal, ac: bool, b: ExtReal, bc: bool):
    if a < b:
        return a, ac
    if b < a:
        return b, bc
    return a, ac and bc


def interval(lo, hi, lo_closed: bool = False, hi_closed: bool = False) -> Span:
    """Build an interval, returning :data:`EMPTY` when the bounds describe no point.

    Closed flags on infinite endpoints are silently dropped.
    """
    lo, hi = ExtReal.of(lo), ExtReal.of(hi)
    lo_closed = lo_closed and lo.is_finite
    hi_closed = hi_closed and hi.is_finite
    if lo.inf == 1 or hi.inf == -1 or hi < lo:
        return EMPTY
    if lo == hi and not (lo_closed and hi_closed):
        return EMPTY
    return Interval(lo, hi, lo_closed, hi_closed)


def open_interval(lo, hi) -> Span:
    return interval(lo, hi, False, False)


def closed_interval(lo, hi) -> Span:
    return interval(lo, hi, True, True)


def point(p) -> Interval:
    p = ExtReal.of(p)
    return Interval(p, p, True, True)


_INTERVAL_RE = re.compile(r"^\s*([\[(])\s*([^,]+?)\s*,\s*([^,]+?)\s*([\])])\s*$")


def _parse_endpoint(text: str) -> ExtReal:
    t = text.strip().lower()
    if t in ("inf", "+inf", "infinity", "+infinity", "oo", "+oo"):
        return POS_INF
    if t in ("-inf", "-infinity", "-oo"):
        return NEG_INF
    return ExtReal(parse_rational(t))


def parse_interval(text: str) -> Span:
    """Parse an interval literal such as ``"(0,2)"``, ``"[1,3/2]"``, ``"(-inf,5)"`` or ``"empty"``.

    Unlike :func:`interval`, a literal that describes no point (``"(2,1)"``)
    is rejected; only ``"empty"`` denotes the empty interval.
    """
    if not isinstance(text, str):
        raise IntervalError(f"interval literal must be a string, got {text!r}")
    if text.strip().lower() in ("empty", "{}", "∅"):
        return EMPTY
    m = _INTERVAL_RE.match(text)
    if not m:
        raise IntervalError(f"malformed interval literal {text!r}")
    lo = _parse_endpoint(m.group(2))
    hi = _parse_endpoint(m.group(3))
    lc, hc = m.group(1) == "[", m.group(4) == "]"
    if (lc and not lo.is_finite) or (hc and not hi.is_finite):
        raise IntervalError(f"infinite endpoint cannot be closed in {text!r}")
    try:
        return Interval(lo, hi, lc, hc)
    except IntervalError as exc:
        raise IntervalError(f"{exc} in {text!r}") from None


def diameter(a: Span) -> ExtReal:
    if a.is_empty:
        raise IntervalError("the empty interval has no diameter")
    return a.hi - a.lo


def half_sum(a: Span, b: Span) -> Span:
    """Minkowski mean ``{(x + y) / 2 : x in a, y in b}``."""
    if a.is_empty or b.is_empty:
        return EMPTY
    return interval(
        (a.lo + b.lo).half(),
        (a.hi + b.hi).half(),
        a.lo_closed and b.lo_closed,
        a.hi_closed and b.hi_closed,
    )


def reflect(s: Span, p: Span, q: Span) -> Span:
    """Points of ``q`` that mirror a point of ``s`` through a point of ``p``.

    Computes ``(2p - s) & q``.  A reflected endpoint ``2*inf(p) - sup(s)`` is
    attained exactly when both contributing endpoints are attained, so the
    closedness of the result is exact, not a convention.
    """
    if s.is_empty or p.is_empty or q.is_empty:
        return EMPTY
    mirrored = interval(
        p.lo.twice() - s.hi,
        p.hi.twice() - s.lo,
        p.lo_closed and s.hi_closed,
        p.hi_closed and s.lo_closed,
    )
    return mirrored & q


def sample_point(a: Span) -> Fraction:
    """A deterministic rational point inside a nonempty interval."""
    if a.is_empty:
        raise IntervalError("no point in the empty interval")
    if a.is_bounded:
        return (a.lo.value + a.hi.value) / 2
    if a.lo.is_finite:
        return a.lo.value + 1
    if a.hi.is_finite:
        return a.hi.value - 1
    return Fraction(0)


class IntervalSet:
    """A finite union of intervals kept in normal form.

    Parts are sorted, pairwise disjoint, and no two of them could be merged
    into a single interval.  Instances are immutable and hashable.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[Span] = ()):
        self._parts = _normalize(parts)

    @classmethod
    def of(cls, *parts: Span) -> "IntervalSet":
        return cls(parts)

    @property
    def parts(self) -> tuple[Interval, ...]:
        return self._parts

    @property
    def is_empty(self) -> bool:
        return not self._parts

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._parts)

    def __len__(self):
        return len(self._parts)

    def __contains__(self, x) -> bool:
        return any(x in part for part in self._parts)

    def __eq__(self, other):
        if isinstance(other, IntervalSet):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self):
        return hash(self._parts)

    def __str__(self):
        if not self._parts:
            return "empty"
        return " u ".join(str(p) for p in self._parts)

    def __repr__(self):
        return f"IntervalSet({str(self)!r})"

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self._parts + other._parts)

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(a & b for a in self._parts for b in other._parts)

    def intersect_interval(self, other: Span) -> "IntervalSet":
        return IntervalSet(a & other for a in self._parts)

    def complement_within(self, ambient: Span) -> "IntervalSet":
        """``ambient`` minus this set."""
        if ambient.is_empty:
            return IntervalSet()
        gaps = []
        lo, lc = ambient.lo, ambient.lo_closed
        for part in self._parts:
            gaps.append(interval(lo, part.lo, lc, not part.lo_closed) & ambient)
            lo, lc = part.hi, not part.hi_closed
        gaps.append(interval(lo, ambient.hi, lc, ambient.hi_closed) & ambient)
        return IntervalSet(gaps)

    def __sub__(self, other: "IntervalSet") -> "IntervalSet":
        if self.is_empty:
            return self
        return self & other.complement_within(self.hull())

    def hull(self) -> Span:
        if not self._parts:
            return EMPTY
        first, last = self._parts[0], self._parts[-1]
        return interval(first.lo, last.hi, first.lo_closed, last.hi_closed)

    @property
    def has_empty_interior(self) -> bool:
        return all(part.is_degenerate for part in self._parts)

    def issubset(self, other: "IntervalSet") -> bool:
        return is_subset(self, other)


def _lower_key(part: Interval):
    # closed lower endpoints sort before open ones at the same position
    return (part.lo, not part.lo_closed)


def _normalize(parts: Iterable[Span]) -> tuple[Interval, ...]:
    items = sorted((p for p in parts if not p.is_empty), key=_lower_key)
    merged: list[Interval] = []
    for part in items:
        if merged:
            last = merged[-1]
            touching = part.lo < last.hi or (
                part.lo == last.hi and (last.hi_closed or part.lo_closed)
            )
            if touching:
                if part.hi > last.hi:
                    hi, hc = part.hi, part.hi_closed
                elif part.hi == last.hi:
                    hi, hc = last.hi, last.hi_closed or part.hi_closed
                else:
                    hi, hc = last.hi, last.hi_closed
                merged[-1] = Interval(last.lo, hi, last.lo_closed, hc)
                continue
        merged.append(part)
    return tuple(merged)


def _as_set(x) -> IntervalSet:
    if isinstance(x, IntervalSet):
        return x
    return IntervalSet([x])


def is_subset(a, b) -> bool:
    """Whether every point of ``a`` lies in ``b``.

    Each part of a normalized set is a connected component, so a part of
    ``a`` is covered by ``b`` exactly when it sits inside one part of ``b``.
    """
    a, b = _as_set(a), _as_set(b)
    return all(any(pa.issubset(pb) for pb in b.parts) for pa in a.parts)


def reflect_set(s, p, q: Span) -> IntervalSet:
    s, p = _as_set(s), _as_set(p)
    return IntervalSet(reflect(si, pj, q) for si in s.parts for pj in p.parts)


def half_sum_set(a, b) -> IntervalSet:
    a, b = _as_set(a), _as_set(b)
    return IntervalSet(half_sum(x, y) for x in a.parts for y in b.parts)


def _inside_open(x: ExtReal, d: Interval) -> bool:
    return x.is_finite and x in d


def closure_within(z, d: Span) -> IntervalSet:
    """Closure of ``z`` relative to the open interval ``d``."""
    z = _as_set(z)
    if d.is_empty:
        raise IntervalError("ambient interval must be nonempty")
    if not d.is_open:
        raise IntervalError(f"ambient interval {d} must be open")
    if not is_subset(z, IntervalSet([d])):
        raise IntervalError(f"{z} is not contained in {d}")
    closed = []
    for part in z.parts:
        closed.append(
            Interval(
                part.lo,
                part.hi,
                part.lo_closed or _inside_open(part.lo, d),
                part.hi_closed or _inside_open(part.hi, d),
            )
        )
    return IntervalSet(closed)


def is_closed_within(z, d: Span) -> bool:
    z = _as_set(z)
    return closure_within(z, d) == z


def parse_interval_set(items: Sequence[str] | str) -> IntervalSet:
    """Parse a list of interval literals, or a single literal, into a set."""
    if isinstance(items, str):
        items = [items]
    return IntervalSet(parse_interval(t) for t in items)

