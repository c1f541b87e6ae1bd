"""Command-line interface.

Subcommands: analyze, sweep, verify-tables, audit, list-gates.

Exit codes: 0 success, 1 parse error, 2 validation error, 3 numerical
error, 4 I/O failure, 5 table verification failure, 6 audit property
violation.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .audit import run_audit
from .canonical import canonical_point, is_perfect_entangler, schmidt_number_line
from .edges import edge, edge_svg, sweep, sweep_csv, verify_tables
from .errors import NumericalError, ParseError, ValidationError
from .gates import (
    Gate,
    catalog,
    catalog_names,
    gate_from_json_data,
    gate_to_json_data,
)
from .invariants import invariants_from_unitary
from .schmidt import schmidt_decompose

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4
EXIT_TABLES = 5
EXIT_AUDIT = 6


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analyze command reports about one gate."""

    source: str
    point: tuple[float, float, float]
    g1: complex
    g2: float
    coefficients: tuple[float, float, float, float]
    schmidt_number: int
    strength: float
    perfect_entangler: bool
    controlled_unitary: bool


def analyze_gate(g: Gate, source: str) -> AnalysisReport:
    point = canonical_point(g)
    inv = invariants_from_unitary(g)
    data = schmidt_decompose(g)
    return AnalysisReport(
        source=source,
        point=(point.c1, point.c2, point.c3),
        g1=inv.g1,
        g2=inv.g2,
        coefficients=tuple(float(v) for v in data.coefficients),
        schmidt_number=data.schmidt_number,
        strength=data.strength,
        perfect_entangler=is_perfect_entangler(point),
        controlled_unitary=schmidt_number_line(point),
    )


def _round15(x: float) -> float:
    return float(f"{x:.15g}")


def report_json(report: AnalysisReport) -> str:
    payload = {
        "source": report.source,
        "canonical_point": [_round15(v) for v in report.point],
        "g1": [_round15(report.g1.real), _round15(report.g1.imag)],
        "g2": _round15(report.g2),
        "schmidt_coefficients": [_round15(v) for v in report.coefficients],
        "schmidt_number": report.schmidt_number,
        "schmidt_strength": _round15(report.strength),
        "perfect_entangler": report.perfect_entangler,
        "controlled_unitary": report.controlled_unitary,
    }
    return json.dumps(payload, indent=2) + "\n"


def _disp(x: float) -> float:
    # flush display noise below the printed precision; -0.0 + 0.0 = 0.0
    return round(x, 12) + 0.0


def report_text(report: AnalysisReport, degrees: bool = False) -> str:
    if degrees:
        point = tuple(_disp(math.degrees(v)) for v in report.point)
        unit = "deg"
    else:
        point = tuple(_disp(v) for v in report.point)
        unit = "rad"
    coeffs = ", ".join(f"{_disp(v):.6f}" for v in report.coefficients)
    lines = [
        f"gate: {report.source}",
        f"canonical point [{unit}]: [{point[0]:.6f}, {point[1]:.6f}, {point[2]:.6f}]",
        f"G1: {_disp(report.g1.real):.6f} {_disp(report.g1.imag):+.6f}i",
        f"G2: {_disp(report.g2):.6f}",
        f"schmidt coefficients: [{coeffs}]",
        f"schmidt number: {report.schmidt_number}",
        f"schmidt strength: {_disp(report.strength):.6f}",
        f"perfect entangler: {'yes' if report.perfect_entangler else 'no'}",
        f"controlled unitary: {'yes' if report.controlled_unitary else 'no'}",
    ]
    return "\n".join(lines) + "\n"


def _load_gate(source: str) -> Gate:
    """Resolve a gate source: a catalog name first, then a JSON file path."""
    if source in catalog_names():
        return catalog(source)
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise ParseError(
            f"{source!r} is neither a catalog name ({', '.join(catalog_names())}) "
            f"nor a readable file: {exc}"
        ) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {source}: {exc}") from None
    return gate_from_json_data(data, name=source)


def _cmd_analyze(args) -> int:
    g = _load_gate(args.source)
    report = analyze_gate(g, source=args.source)
    if args.format == "json":
        sys.stdout.write(report_json(report))
    else:
        sys.stdout.write(report_text(report, degrees=args.degrees))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    edge(args.edge)  # validate the name before touching the filesystem
    if args.n < 2:
        raise ValidationError("--n must be at least 2")
    csv_text = sweep_csv(args.edge, args.n)
    rows = sweep(args.edge, args.n)
    strengths = [r.strength for r in rows]
    out = Path(args.out)
    try:
        out.write_text(csv_text, newline="\n")
        if args.svg:
            out.with_suffix(".svg").write_text(edge_svg(args.edge, args.n), newline="\n")
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    written = str(out) + (f" and {out.with_suffix('.svg')}" if args.svg else "")
    print(
        f"edge {args.edge}: {args.n} points, strength range "
        f"[{min(strengths):.6f}, {max(strengths):.6f}], wrote {written}"
    )
    return EXIT_OK


def _cmd_verify_tables(args) -> int:
    if args.n < 2:
        raise ValidationError("--n must be at least 2")
    report = verify_tables(args.n)
    for check in report.checks:
        status = "ok" if check.max_deviation <= report.tolerance else "FAIL"
        print(
            f"edge {check.name:4s}: max deviation {check.max_deviation:.3e} "
            f"at parameter {check.worst_param:.9f}  {status}"
        )
    if report.passed:
        print(
            f"PASS: {len(report.checks)} edges within {report.tolerance:g} "
            f"on {args.n}-point grids"
        )
        return EXIT_OK
    worst = max(report.checks, key=lambda c: c.max_deviation)
    print(
        f"FAIL: edge {worst.name} deviates by {worst.max_deviation:.3e} "
        f"at parameter {worst.worst_param:.9f}",
        file=sys.stderr,
    )
    return EXIT_TABLES


def _cmd_audit(args) -> int:
    result = run_audit(args.samples, args.seed)
    print(f"audit: samples={result.samples} seed={result.seed}")
    for check in result.checks:
        print(f"  {check.name}: {check.detail}  {'PASS' if check.passed else 'FAIL'}")
    if result.passed:
        print("audit: PASS")
        return EXIT_OK
    print("audit: FAIL")
    if result.counterexample is not None:
        path = Path(args.dump) if args.dump else Path("audit_counterexample.json")
        path.write_text(
            json.dumps(gate_to_json_data(result.counterexample)) + "\n", newline="\n"
        )
        print(f"counterexample gate written to {path}")
    return EXIT_AUDIT


def _cmd_list_gates(args) -> int:
    for name in catalog_names():
        g = catalog(name)
        point = canonical_point(g)
        pe = "PE" if is_perfect_entangler(point) else "--"
        print(
            f"{name:11s} [{point.c1:.6f}, {point.c2:.6f}, {point.c3:.6f}]  {pe}"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoqubit",
        description="Nonlocal structure of two-qubit gates: canonical "
        "coordinates, local invariants, operator-Schmidt data and "
        "perfect-entangler classification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for a catalog gate or JSON file")
    p.add_argument("source", help="catalog name or path to a gate JSON file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument(
        "--degrees", action="store_true", help="display angles in degrees (text only)"
    )
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("sweep", help="sweep one edge and write CSV (and SVG)")
    p.add_argument("edge", help="edge name, e.g. OA1 or PN")
    p.add_argument("--n", type=int, default=101, help="grid points (default 101)")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--svg", action="store_true", help="also write an SVG plot")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser(
        "verify-tables",
        help="check closed-form edge coefficients against the engine",
    )
    p.add_argument("--n", type=int, default=97, help="grid points per edge")
    p.set_defaults(func=_cmd_verify_tables)

    p = sub.add_parser("audit", help="seeded randomized property audit")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument(
        "--dump", help="where to write a counterexample gate on failure"
    )
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("list-gates", help="list catalog gates with their coordinates")
    p.set_defaults(func=_cmd_list_gates)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
