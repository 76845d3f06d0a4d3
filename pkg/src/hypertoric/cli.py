"""Command-line interface.

Exit status: 0 on success, 1 when the weight data fails validation, 2 on
unreadable input or usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .chambers import chambers, unstable_locus
from .invariants import CapExceeded, footnote_relation, grading, hilbert_basis
from .report import CENSUS_MAX_N, ParseError, analyze, parse_document, weight_data
from .lattice import IntMatrix
from .torus import ValidationFailed, WeightDataError, validate

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_validate(args, text: str) -> int:
    parsed = parse_document(text)
    rows = [parsed["a"]] if "a" in parsed else parsed["A"]
    A = IntMatrix.from_rows(rows)
    verdict = validate(A)
    if args.format == "json":
        sys.stdout.write(_dump(verdict.to_dict()))
    elif verdict.ok:
        sys.stdout.write("valid\n")
    else:
        sys.stdout.write("invalid\n")
        for f in verdict.failures:
            sys.stdout.write(f"  {f.describe()}\n")
    return EXIT_OK if verdict.ok else EXIT_INVALID


def cmd_report(args, text: str) -> int:
    rep = analyze(text, safety_cap=args.max_degree, jobs=args.jobs)
    sys.stdout.write(rep.to_json() if args.format == "json" else rep.to_text())
    return EXIT_OK


def cmd_analyze(args, text: str) -> int:
    rep = analyze(text, safety_cap=args.max_degree, jobs=args.jobs)
    data = rep.to_dict()
    summary = {
        "dimensions": data["dimensions"],
        "generator_count": len(data["generators"]),
        "grading": data["grading"],
        "chamber_count": data["chambers"]["count"],
        "fibers": data["fibers"],
        "pi1_certified": rep.certified,
    }
    if args.format == "json":
        sys.stdout.write(_dump(summary))
        return EXIT_OK
    dims = summary["dimensions"]
    g = summary["grading"]
    out = [
        f"dim Y = {dims['Y']}, dim mu^-1(0) = {dims['mu_fiber']}, dim Sing = {dims['sing']}",
        f"generators: {summary['generator_count']} (weights {g['weights']}, "
        f"maximal {g['maximal_weight']}, half-grading maximal {g['half_maximal_weight']})",
        f"chambers: {summary['chamber_count'] if summary['chamber_count'] is not None else 'not enumerated'}",
    ]
    if summary["fibers"]["plus"]:
        out.append(f"exceptional fibers: {summary['fibers']['plus']} / {summary['fibers']['minus']}")
    out.append("pi_1 certificate: " + ("issued" if rep.certified else "NOT issued"))
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def cmd_invariants(args, text: str) -> int:
    wd = weight_data(text)
    basis = hilbert_basis(wd, args.max_degree)
    grad = grading(wd, basis)
    relation = str(footnote_relation(wd)) if wd.d == 1 else None
    if args.format == "json":
        sys.stdout.write(_dump({
            "generators": [{"u": list(m.u), "v": list(m.v), "weight": w} for m, w in grad.generator_weights],
            "grading": {
                "maximal_weight": grad.maximal_weight,
                "half_gradable": grad.half_gradable,
                "half_maximal_weight": grad.half_maximal_weight,
                "omega_weight": grad.omega_weight,
            },
            "relation": relation,
        }))
        return EXIT_OK
    out = [f"{len(basis)} generators"]
    out += [f"  {str(m):<24} weight {w}" for m, w in grad.generator_weights]
    out.append(f"maximal weight {grad.maximal_weight}")
    if grad.half_gradable:
        out.append(f"half grading: maximal weight {grad.half_maximal_weight}, omega weight 1")
    if relation:
        out.append(f"relation: {relation}")
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def cmd_chambers(args, text: str) -> int:
    wd = weight_data(text)
    ch = chambers(wd)
    entries = []
    for c in ch.chambers or ():
        entry = {"sample": list(c.sample), "walls": [list(w) for w in c.walls]}
        if wd.n <= CENSUS_MAX_N:
            loc = unstable_locus(wd, c.sample)
            entry["unstable"] = [s.describe() for s in loc.subspaces]
        entries.append(entry)
    if args.format == "json":
        sys.stdout.write(_dump({
            "count": ch.count,
            "enumerated": ch.enumerated,
            "walls": [list(w) for w in ch.walls],
            "chambers": entries,
        }))
        return EXIT_OK
    out = [f"walls: {[list(w) for w in ch.walls]}"]
    if not ch.enumerated:
        out.append("chambers: not enumerated for d >= 3")
    else:
        out.append(f"{ch.count} chambers")
        for e in entries:
            line = f"  sample {e['sample']}"
            if "unstable" in e:
                line += "  unstable: " + " u ".join(e["unstable"])
            out.append(line)
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "invariants": cmd_invariants,
    "chambers": cmd_chambers,
    "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypertoric",
        description="Invariants and certificates for toric hyperkaehler quotients Y(A,0).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("file", help='JSON input {"a": [...]} or {"A": [[...], ...]}; "-" for stdin')
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-degree", type=int, default=64,
                       help="abort the generator completion once its open candidates pass this total "
                            "degree (candidates can run past the final generator degree)")
        p.add_argument("--jobs", type=int, default=1, help="threads for pattern sweeps")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        text = _read(args.file)
        return COMMANDS[args.command](args, text)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationFailed as exc:
        if args.format == "json":
            sys.stdout.write(_dump({"validation": exc.verdict.to_dict()}))
        else:
            sys.stdout.write("invalid\n")
            for f in exc.verdict.failures:
                sys.stdout.write(f"  {f.describe()}\n")
        return EXIT_INVALID
    except WeightDataError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceeded as exc:
        print(f"error: {exc}; raise --max-degree", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
