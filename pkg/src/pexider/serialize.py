"""JSON forms of instances, verdicts and classifications.

Intervals travel as literal strings (``"(0,2)"``, ``"[1,3/2]"``, ``"(-inf,5)"``)
and rationals as integers or ``"p/q"`` strings, so a round trip is exact.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .checker import EquationInstance, InstanceError, Verdict
from .classifier import (
    Classification,
    Extremal,
    NotASolution,
    OneConstant,
    TwoSidedPlateaus,
    ZeroSetNotClosed,
)
from .interval import (
    IntervalError,
    IntervalSet,
    format_rational,
    half_sum,
    is_subset,
    parse_interval,
    parse_interval_set,
    parse_rational,
)
from .piecewise import PiecewiseConstant, PiecewiseError

__all__ = [
    "FormatError",
    "instance_to_json",
    "instance_from_json",
    "dumps_instance",
    "loads_instance",
    "verdict_to_json",
    "classification_to_json",
    "classification_from_json",
    "dumps",
]

INSTANCE_KEYS = ("I1", "I2", "zero_set", "f1", "f2")


class FormatError(ValueError):
    """A malformed document; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        self.message = message
        self.line = line
        self.source = source
        where = f"{source}:{line}" if line else source
        super().__init__(f"{where}: {message}")


def _rat(q: Fraction | None):
    if q is None:
        return None
    return q.numerator if q.denominator == 1 else format_rational(q)


def dumps(obj) -> str:
    """Canonical JSON text: fixed key order, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2) + "\n"


def instance_to_json(inst: EquationInstance) -> dict:
    return {
        "I1": str(inst.i1),
        "I2": str(inst.i2),
        "zero_set": [str(p) for p in inst.zero_set.parts],
        "f1": inst.f1.to_json(),
        "f2": inst.f2.to_json(),
    }


def dumps_instance(inst: EquationInstance) -> str:
    return dumps(instance_to_json(inst))


def _line_of(text: str | None, *needles: str) -> int | None:
    """Line of the last needle, searching each one after the previous."""
    if text is None:
        return None
    pos = 0
    for needle in needles:
        found = text.find(needle, pos)
        if found < 0:
            break
        pos = found
    else:
        return text.count("\n", 0, pos) + 1
    return None


def instance_from_json(doc, text: str | None = None, source: str = "<input>") -> EquationInstance:
    """Validate and build an instance.  ``text`` is only used to locate errors."""
    if not isinstance(doc, dict):
        raise FormatError("an instance must be a JSON object", 1, source)
    missing = [k for k in INSTANCE_KEYS if k not in doc]
    if missing:
        raise FormatError(f"missing keys: {', '.join(missing)}", 1, source)
    extra = sorted(set(doc) - set(INSTANCE_KEYS))
    if extra:
        raise FormatError(f"unknown keys: {', '.join(extra)}", _line_of(text, f'"{extra[0]}"'), source)

    def fail(exc, key, literal=None):
        needles = [f'"{key}"'] + ([json.dumps(literal)] if isinstance(literal, str) else [])
        raise FormatError(f"{key}: {exc}", _line_of(text, *needles), source) from None

    domains = {}
    for key in ("I1", "I2"):
        try:
            domains[key] = parse_interval(doc[key])
        except IntervalError as exc:
            fail(exc, key, doc[key])
        if domains[key].is_empty or not domains[key].is_open:
            fail("must be a nonempty open interval", key, doc[key])

    zs = doc["zero_set"]
    if not isinstance(zs, list):
        fail("must be a list of interval literals", "zero_set")
    d = half_sum(domains["I1"], domains["I2"])
    for lit in zs:
        try:
            part = parse_interval(lit)
        except IntervalError as exc:
            fail(exc, "zero_set", lit)
        if not is_subset(part, d):
            fail(f"{lit} is not contained in D = {d}", "zero_set", lit)
    zero_set = parse_interval_set(zs) if zs else IntervalSet()

    funcs = {}
    for key, dom in (("f1", domains["I1"]), ("f2", domains["I2"])):
        try:
            funcs[key] = PiecewiseConstant.from_json(dom, doc[key])
        except (PiecewiseError, IntervalError) as exc:
            culprit = None
            items = doc[key] if isinstance(doc[key], list) else []
            for item in items:
                if isinstance(item, dict) and isinstance(item.get("piece"), str):
                    if item["piece"] in str(exc):
                        culprit = item["piece"]
                        break
            fail(exc, key, culprit)
    try:
        return EquationInstance(domains["I1"], domains["I2"], zero_set, funcs["f1"], funcs["f2"])
    except InstanceError as exc:
        fail(exc, "zero_set")


def loads_instance(text: str, source: str = "<input>") -> EquationInstance:
    try:
        doc = json.loads(text, parse_float=parse_rational)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno, source) from None
    except IntervalError as exc:
        raise FormatError(str(exc), None, source) from None
    return instance_from_json(doc, text, source)


def verdict_to_json(v: Verdict) -> dict:
    out = {"holds": v.holds, "witness": None}
    if v.witness is not None:
        x, y = v.witness
        out["witness"] = {"x": _rat(x), "y": _rat(y), "midpoint": _rat((x + y) / 2)}
    return out


def _span(s) -> str:
    return str(s)


def classification_to_json(c: Classification) -> dict:
    if isinstance(c, Extremal):
        return {"case": c.case, "lambda": _rat(c.lam)}
    if isinstance(c, TwoSidedPlateaus):
        return {
            "case": c.case,
            "lambda": _rat(c.lam),
            "mu": _rat(c.mu),
            "U1": _span(c.u1),
            "U2": _span(c.u2),
            "V1": _span(c.v1),
            "V2": _span(c.v2),
            "K1": _span(c.k1),
            "K2": _span(c.k2),
        }
    if isinstance(c, OneConstant):
        return {
            "case": c.case,
            "i": c.i,
            "lambda": _rat(c.lam),
            "plateaus": [str(p) for p in c.plateaus],
            "K": [str(p) for p in c.big_k],
        }
    if isinstance(c, NotASolution):
        x, y = c.witness
        return {"case": c.case, "witness": {"x": _rat(x), "y": _rat(y)}}
    if isinstance(c, ZeroSetNotClosed):
        return {"case": c.case}
    raise TypeError(f"not a classification: {c!r}")


def _opt_rat(v):
    return None if v is None else parse_rational(str(v))


def classification_from_json(doc: dict) -> Classification:
    case = doc.get("case")
    if case == "extremal":
        return Extremal(_opt_rat(doc["lambda"]))
    if case == "two_sided":
        return TwoSidedPlateaus(
            _opt_rat(doc["lambda"]),
            _opt_rat(doc["mu"]),
            *(parse_interval(doc[k]) for k in ("U1", "U2", "V1", "V2", "K1", "K2")),
        )
    if case == "one_constant":
        return OneConstant(
            int(doc["i"]),
            _opt_rat(doc["lambda"]),
            parse_interval_set(doc["plateaus"]),
            parse_interval_set(doc["K"]),
        )
    if case == "not_a_solution":
        w = doc["witness"]
        return NotASolution((_opt_rat(w["x"]), _opt_rat(w["y"])))
    if case == "zero_set_not_closed":
        return ZeroSetNotClosed()
    raise FormatError(f"unknown classification case {case!r}")
