"""Command-line front end.

Exit codes: ``check`` returns 0 when the equation holds and 1 otherwise;
``classify`` returns 0 for a valid case, 1 for a non-solution and 3 when the
zero set is not closed in ``D``; parse and validation errors return 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .checker import DEFAULT_STEP, check_exact, check_grid, default_window
from .classifier import NotASolution, ZeroSetNotClosed, classify, explain, verify_classification
from .generator import CASES, EXPECTED, GenerationError, GenSpec, generate, make_manifest
from .interval import IntervalError, closed_interval, parse_interval, parse_rational, reflect
from .serialize import (
    FormatError,
    classification_to_json,
    dumps,
    dumps_instance,
    loads_instance,
    verdict_to_json,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NOT_CLOSED = 3

REJECTED = ("not_a_solution", "zero_set_not_closed")


def _styled(text: str, code: str, stream) -> str:
    if os.environ.get("PEXIDER_NO_COLOR") or not stream.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except IntervalError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _interval_arg(text: str):
    try:
        return parse_interval(text)
    except IntervalError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _seed_arg(text: str) -> int:
    seed = int(text)
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return seed


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(exc.strerror or str(exc), None, path) from None
    return loads_instance(text, source=path)


def cmd_check(args, out) -> int:
    inst = _load(args.instance)
    verdict = check_exact(inst)
    window = args.window if args.window is not None else default_window(inst)
    grid = check_grid(inst, window, args.grid_step)
    report = {
        "exact": verdict_to_json(verdict),
        "grid": {"window": str(window), "step": str(args.grid_step), **verdict_to_json(grid)},
    }
    out.write(dumps(report))
    return EXIT_OK if verdict.holds else EXIT_FAIL


def _classification_exit(c) -> int:
    if isinstance(c, ZeroSetNotClosed):
        return EXIT_NOT_CLOSED
    if isinstance(c, NotASolution):
        return EXIT_FAIL
    return EXIT_OK


def cmd_classify(args, out) -> int:
    inst = _load(args.instance)
    c = classify(inst)
    if args.explain:
        out.write(explain(inst, c) + "\n")
    else:
        out.write(dumps(classification_to_json(c)))
    return _classification_exit(c)


def _spec(args, case: str, seed: int) -> GenSpec:
    return GenSpec(case, seed, args.bounds, args.max_pieces)


def cmd_generate(args, out) -> int:
    if args.manifest:
        cases = CASES if args.case == "all" else (args.case,)
        seeds = range(args.seed, args.seed + args.count)
        Path(args.manifest).write_text(dumps(make_manifest(cases, seeds)), encoding="utf-8")
        return EXIT_OK
    if args.case == "all":
        raise FormatError("--case all is only meaningful with --manifest")
    text = dumps_instance(generate(_spec(args, args.case, args.seed)))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def cmd_reflect(args, out) -> int:
    out.write(f"{reflect(args.s, args.p, args.q)}\n")
    return EXIT_OK


def _run_entry(job):
    entry, base, bounds, max_pieces = job
    if "path" in entry:
        inst = _load(str(base / entry["path"]))
        label = entry["path"]
    else:
        inst = generate(GenSpec(entry["case"], int(entry["seed"]), bounds, max_pieces))
        label = f"{entry['case']}#{entry['seed']}"
    c = classify(inst)
    expect = entry.get("expect")
    if expect == "rejected":
        ok = c.case in REJECTED
    else:
        ok = c.case == expect and verify_classification(inst, c)
    return label, expect, c.case, ok


def cmd_corpus(args, out) -> int:
    path = Path(args.manifest)
    try:
        text = path.read_text(encoding="utf-8")
        manifest = json.loads(text)
    except OSError as exc:
        raise FormatError(exc.strerror or str(exc), None, str(path)) from None
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno, str(path)) from None
    entries = manifest.get("entries") if isinstance(manifest, dict) else None
    if not isinstance(entries, list):
        raise FormatError("manifest needs an 'entries' list", 1, str(path))
    for k, entry in enumerate(entries):
        if not isinstance(entry, dict) or not ("path" in entry or {"case", "seed"} <= set(entry)):
            raise FormatError(f"entry {k} needs 'path' or 'case' and 'seed'", None, str(path))
        if entry.get("expect") not in set(EXPECTED.values()):
            raise FormatError(f"entry {k}: unknown expectation {entry.get('expect')!r}", None, str(path))
    jobs = [(e, path.parent, args.bounds, args.max_pieces) for e in entries]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_run_entry, jobs, chunksize=16))
    else:
        results = [_run_entry(j) for j in jobs]
    passed = 0
    for label, expect, got, ok in results:
        passed += ok
        status = _styled("PASS", "32", out) if ok else _styled("FAIL", "31", out)
        out.write(f"{status} {label}: expected {expect}, got {got}\n")
    out.write(f"{passed}/{len(results)} passed, {len(results) - passed} failed\n")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pexider",
        description="Check and classify solutions of phi((x+y)/2)(f1(x) - f2(y)) = 0.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", help="decide whether an instance solves the equation")
    p.add_argument("instance")
    p.add_argument("--grid-step", type=_rational_arg, default=DEFAULT_STEP)
    p.add_argument("--window", type=_interval_arg, default=None,
                   help="bounded oracle window (default: padded hull of all endpoints)")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("classify", help="sort a solution into case (i), (ii) or (iii)")
    p.add_argument("instance")
    p.add_argument("--explain", action="store_true", help="human-readable report")
    p.set_defaults(run=cmd_classify)

    for name, helptext in (("generate", "write a seeded instance"), ("corpus", "run a manifest")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--bounds", type=_interval_arg, default=closed_interval(-4, 4))
        p.add_argument("--max-pieces", type=int, default=4)
        if name == "generate":
            p.add_argument("--case", required=True, choices=[*CASES, "all"])
            p.add_argument("--seed", type=_seed_arg, default=0)
            p.add_argument("--out", default=None)
            p.add_argument("--manifest", default=None,
                           help="write a manifest of --count seeds instead of an instance")
            p.add_argument("--count", type=int, default=100)
            p.set_defaults(run=cmd_generate)
        else:
            p.add_argument("manifest")
            p.add_argument("--jobs", type=int, default=1)
            p.set_defaults(run=cmd_corpus)

    p = sub.add_parser("reflect", help="print (2P - S) & Q for three interval literals")
    p.add_argument("--s", type=_interval_arg, required=True)
    p.add_argument("--p", type=_interval_arg, required=True)
    p.add_argument("--q", type=_interval_arg, required=True)
    p.set_defaults(run=cmd_reflect)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.run(args, out)
    except (FormatError, GenerationError, IntervalError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
