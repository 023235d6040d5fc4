"""Command line front end: ``smncubic classify|solve|batch|render``.

Exit codes: 0 success, 2 malformed input or unreadable file, 3 ``solve --check``
discrepancy above 1e-6, 4 ``render`` asked for a triangle that does not exist.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from .classifier import DEFAULT_BOUNDARY_TOL, Classification, classify
from .core import (
    DomainError,
    MonicCubic,
    balanced_roots,
    critical_points,
    envelope,
    smn_triangle,
)
from .oracle import cross_check
from .refiner import RootReport, solve

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CHECK = 3
EXIT_NO_TRIANGLE = 4

CHECK_LIMIT = 1e-6
MULTIPLICITY_NAMES = {1: "simple", 2: "double", 3: "triple"}


def num(x: float) -> Optional[float]:
    """Round to 12 significant digits; non-finite values become null."""
    if not math.isfinite(x):
        return None
    return float("%.12g" % x) + 0.0


def dumps(obj) -> str:
    return json.dumps(obj, allow_nan=False)


def _input_dict(p: MonicCubic) -> dict:
    return {"a": num(p.a), "b": num(p.b), "c": num(p.c)}


def _classification_fields(cls: Classification) -> dict:
    return {
        "case": cls.case.value,
        "subcase": cls.subcase.value if cls.subcase else None,
        "boundary_flags": sorted(cls.boundary_flags),
    }


def classification_dict(p: MonicCubic, tol: float) -> dict:
    cls = classify(p, tol)
    out = {"input": _input_dict(p), **_classification_fields(cls)}
    crit = critical_points(p)
    if crit is None:
        out.update(envelope=None, critical=None, balanced=None, extreme=None)
        return out
    env = envelope(p.a, p.b)
    nu1, nu2, nu3 = balanced_roots(p.a, p.b)
    out["envelope"] = {"c0": num(env.c0), "c1": num(env.c1), "c2": num(env.c2)}
    out["critical"] = {
        "mu1": num(crit.mu1), "mu2": num(crit.mu2), "phi": num(crit.phi), "r": num(crit.r)
    }
    out["balanced"] = {"nu1": num(nu1), "nu2": num(nu2), "nu3": num(nu3)}
    out["extreme"] = {"xi1": num(crit.phi - 2 * crit.r), "xi2": num(crit.phi + 2 * crit.r)}
    return out


def report_dict(report: RootReport) -> dict:
    theta = None
    if report.classification.case.has_triangle:
        theta = num(smn_triangle(*report.real_roots_expanded()).theta)
    pair = report.complex_pair
    return {
        "input": _input_dict(report.cubic),
        **_classification_fields(report.classification),
        "intervals": [
            {"lo": num(iv.lo), "hi": num(iv.hi), "multiplicity": iv.multiplicity}
            for iv in report.isolation
        ],
        "roots": [
            {"value": num(r.value), "multiplicity": r.multiplicity, "residual": num(r.residual)}
            for r in report.roots
        ],
        "complex_pair": None if pair is None else {"re": num(pair[0]), "im": num(pair[1])},
        "theta": theta,
    }


def check_dict(p: MonicCubic, tol: float) -> dict:
    chk = cross_check(p, boundary_tol=tol)
    return {
        "max_discrepancy": num(chk.max_discrepancy),
        "count_agrees": chk.count_agrees,
        "multiplicity_agrees": chk.multiplicity_agrees,
        "oracle": [num(x) for x in chk.oracle],
        "cardano": [num(x) for x in chk.cardano],
    }


def _g(x) -> str:
    return "null" if x is None else "%.12g" % x


def classification_text(d: dict) -> str:
    lines = [f"case: {d['case']}" + (f" (subcase {d['subcase']})" if d["subcase"] else "")]
    lines.append("boundary flags: " + (", ".join(d["boundary_flags"]) or "none"))
    if d["envelope"] is None:
        lines.append("envelope: none (b > a^2/3)")
        return "\n".join(lines) + "\n"
    for group in ("envelope", "critical", "balanced", "extreme"):
        lines.append(f"{group}: " + ", ".join(f"{k}={_g(v)}" for k, v in d[group].items()))
    return "\n".join(lines) + "\n"


def report_text(d: dict) -> str:
    lines = [f"case: {d['case']}" + (f" (subcase {d['subcase']})" if d["subcase"] else "")]
    lines.append("boundary flags: " + (", ".join(d["boundary_flags"]) or "none"))
    lines.append("isolation intervals:")
    for iv in d["intervals"]:
        lines.append(f"  [{_g(iv['lo'])}, {_g(iv['hi'])}] {MULTIPLICITY_NAMES[iv['multiplicity']]}")
    lines.append("roots:")
    for r in d["roots"]:
        lines.append(
            f"  {_g(r['value'])} {MULTIPLICITY_NAMES[r['multiplicity']]} residual={_g(r['residual'])}"
        )
    pair = d["complex_pair"]
    lines.append("complex pair: " + ("none" if pair is None else f"{_g(pair['re'])} +/- {_g(pair['im'])}i"))
    if d["theta"] is not None:
        lines.append(f"theta: {_g(d['theta'])}")
    if "check" in d:
        chk = d["check"]
        lines.append(
            f"check: max discrepancy {_g(chk['max_discrepancy'])}, "
            f"counts agree {chk['count_agrees']}, multiplicities agree {chk['multiplicity_agrees']}"
        )
    return "\n".join(lines) + "\n"


def finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return value


def nonnegative_float(text: str) -> float:
    value = finite_float(text)
    if value < 0:
        raise argparse.ArgumentTypeError("tolerance must be non-negative")
    return value


def _tol(args) -> float:
    return DEFAULT_BOUNDARY_TOL if args.tol is None else args.tol


def cmd_classify(args) -> int:
    p = MonicCubic(args.a, args.b, args.c)
    d = classification_dict(p, _tol(args))
    sys.stdout.write(dumps(d) + "\n" if args.format == "json" else classification_text(d))
    return EXIT_OK


def cmd_solve(args) -> int:
    p = MonicCubic(args.a, args.b, args.c)
    tol = _tol(args)
    d = report_dict(solve(p, boundary_tol=tol))
    status = EXIT_OK
    if args.check:
        d["check"] = check_dict(p, tol)
        chk = d["check"]
        if (
            chk["max_discrepancy"] is None
            or chk["max_discrepancy"] > CHECK_LIMIT
            or not (chk["count_agrees"] and chk["multiplicity_agrees"])
        ):
            status = EXIT_CHECK
    sys.stdout.write(dumps(d) + "\n" if args.format == "json" else report_text(d))
    return status


def parse_row(fields: List[str]) -> MonicCubic:
    if len(fields) != 3:
        raise ValueError(f"expected 3 fields, got {len(fields)}")
    values = []
    for name, text in zip("abc", fields):
        try:
            value = float(text.strip())
        except ValueError:
            raise ValueError(f"field {name} is not a number: {text.strip()!r}")
        if not math.isfinite(value):
            raise ValueError(f"field {name} is not finite: {text.strip()!r}")
        values.append(value)
    return MonicCubic(*values)


def read_records(lines) -> List[tuple]:
    """(line_no, cubic or None, error reason or None) for every data line."""
    records = []
    header_allowed = True
    for line_no, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = next(csv.reader([stripped]))
        if header_allowed and [f.strip().lower() for f in fields] == ["a", "b", "c"]:
            header_allowed = False
            continue
        header_allowed = False
        try:
            records.append((line_no, parse_row(fields), None))
        except ValueError as exc:
            records.append((line_no, None, str(exc)))
    return records


def _batch_line(item) -> str:
    line_no, p, reason, tol = item
    if p is None:
        return dumps({"line_no": line_no, "reason": reason})
    return dumps({"line_no": line_no, **report_dict(solve(p, boundary_tol=tol))})


def cmd_batch(args) -> int:
    try:
        with open(args.infile, encoding="utf-8") as fh:
            records = read_records(fh)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"smncubic batch: cannot read {args.infile}: {exc}", file=sys.stderr)
        return EXIT_INPUT

    tol = _tol(args)
    items = [(line_no, p, reason, tol) for line_no, p, reason in records]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            lines = list(pool.map(_batch_line, items, chunksize=max(1, len(items) // (4 * args.jobs))))
    else:
        lines = [_batch_line(item) for item in items]

    try:
        with open(args.outfile, "w", encoding="utf-8") as fh:
            fh.writelines(line + "\n" for line in lines)
    except OSError as exc:
        print(f"smncubic batch: cannot write {args.outfile}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT if any(reason for _, _, reason in records) else EXIT_OK


def cmd_render(args) -> int:
    from .render import render_svg

    p = MonicCubic(args.a, args.b, args.c)
    try:
        svg = render_svg(p, sweep=args.sweep, boundary_tol=_tol(args))
    except DomainError as exc:
        print(f"smncubic render: {exc}", file=sys.stderr)
        return EXIT_NO_TRIANGLE
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tol", type=nonnegative_float, default=argparse.SUPPRESS,
        help=f"relative boundary tolerance (default {DEFAULT_BOUNDARY_TOL:g})",
    )
    coeffs = argparse.ArgumentParser(add_help=False)
    for name in ("a", "b", "c"):
        coeffs.add_argument(f"--{name}", type=finite_float, required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="smncubic",
        description="Classify, isolate and refine the real roots of x^3 + a x^2 + b x + c.",
    )
    parser.add_argument("--tol", type=nonnegative_float, default=None,
                        help=f"relative boundary tolerance (default {DEFAULT_BOUNDARY_TOL:g})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common, coeffs, fmt], help="case, envelope and landmarks")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", parents=[common, coeffs, fmt], help="isolation intervals and roots")
    p.add_argument("--check", action="store_true", help="cross-check against the oracles")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("batch", parents=[common], help="CSV of a,b,c rows to JSON lines")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output order is kept)")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("render", parents=[common, coeffs], help="SVG of the cubic and its triangle")
    p.add_argument("--out", required=True)
    p.add_argument("--sweep", type=int, default=0, help="overlay N triangles for c across [c2, c1]")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
