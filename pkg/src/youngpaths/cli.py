"""Command-line front end.

Exit codes: 0 pass, 1 violation, 2 usage or configuration error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .gram import basis, verify_identities
from .lgv import DEFAULT_SYSTEM_BUDGET, check_determinant_one
from .partition import PartitionError, parse_partition
from .patharray import DEFAULT_PATH_LIMIT, path_count_array
from .sweep import PROPERTIES, SweepConfig, SweepReport, run_sweep

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _partition(text: str):
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise UsageError(str(exc)) from None


def cmd_array(args: argparse.Namespace) -> int:
    d = path_count_array(_partition(args.partition))
    if args.format == "json":
        print(d.to_json())
    elif args.format == "csv":
        sys.stdout.write(d.to_csv())
    else:
        print(d.render())
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    p = _partition(args.partition)
    dets = check_determinant_one(p)
    idents = verify_identities(p)
    ok = dets.passed and idents.passed
    if args.format == "json":
        doc = {
            "partition": list(p.parts),
            "determinants": dets.to_dict(),
            "identities": idents.to_dict(),
            "pass": ok,
        }
        print(json.dumps(doc))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "params", "value", "expected", "pass"])
        for c in dets.checks + idents.checks:
            params = ";".join(f"{k}={v}" for k, v in c.params.items())
            w.writerow([c.name, params, c.value, c.expected, c.passed])
        sys.stdout.write(buf.getvalue())
    else:
        print("determinant-one:")
        print(dets.render())
        print("identities:")
        print(idents.render())
        print("PASS" if ok else "FAIL")
    for c in dets.failures() + idents.failures():
        print(f"violation: {c.describe()}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_basis(args: argparse.Namespace) -> int:
    p = _partition(args.partition)
    if not p:
        raise UsageError("the empty partition has no basis")
    ys = basis(p)
    if args.format == "json":
        print(json.dumps({"partition": list(p.parts), "n": len(ys), "basis": [y.to_dict() for y in ys]}))
    elif args.format == "csv":
        for y in ys:
            print(",".join([str(y.j)] + [str(c) for c in y.vector()]))
    else:
        for y in ys:
            print(y.render())
    return EXIT_OK


def _render_sweep(report: SweepReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["property", "checks", "failures", "inconclusive"])
        for prop, counts in report.summary.items():
            w.writerow([prop, counts["checks"], counts["failures"], counts["inconclusive"]])
        return buf.getvalue()
    lines = [f"partitions with at most {report.config.max_cells} cells: {report.partitions}"]
    for prop, counts in report.summary.items():
        status = "ok" if counts["failures"] == 0 else "FAIL"
        lines.append(
            f"{prop:<13} {counts['checks']:>8} checks  {counts['failures']} failures  "
            f"{counts['inconclusive']} inconclusive  {status}"
        )
    if report.config.explore:
        lines.append(f"exploratory: {len(report.exploratory)} non-contiguous selections with det != 1 (not certified)")
    lines.append("PASS" if report.passed else "FAIL")
    return "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace) -> int:
    props = tuple(p.strip() for p in args.properties.split(",") if p.strip())
    try:
        cfg = SweepConfig(
            max_cells=args.max_cells,
            properties=props,
            path_budget=args.path_budget,
            system_budget=args.system_budget,
            workers=args.workers,
            explore=args.explore or args.explore_samples is not None,
            explore_samples=args.explore_samples,
            seed=args.seed,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_sweep(cfg)
    sys.stdout.write(_render_sweep(report, args.format))
    for f in report.failures:
        print(f"violation: {json.dumps(f)}", file=sys.stderr)
    if report.failures:
        return EXIT_VIOLATION
    if report.inconclusive and args.strict:
        return EXIT_VIOLATION
    return EXIT_OK


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="youngpaths",
        description="Lattice-path arrays of Young diagrams: determinants, bases and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    formats = ("text", "json", "csv")

    p = sub.add_parser("array", help="print the path-count array of a partition")
    p.add_argument("partition", help='comma-separated parts, e.g. "5,4,3,3"')
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=cmd_array)

    p = sub.add_parser("check", help="certify unit determinants and basis identities")
    p.add_argument("partition")
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("basis", help="print the integral orthonormal basis y_1..y_n")
    p.add_argument("partition")
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", help="sweep every partition up to a size")
    p.add_argument("--max-cells", type=_nonneg, default=14)
    p.add_argument("--properties", default=",".join(PROPERTIES), help=f"subset of {','.join(PROPERTIES)}")
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--path-budget", type=int, default=DEFAULT_PATH_LIMIT)
    p.add_argument("--system-budget", type=int, default=DEFAULT_SYSTEM_BUDGET)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--strict", action="store_true", help="treat inconclusive checks as failures")
    p.add_argument("--explore", action="store_true", help="also scan non-contiguous selections (report only)")
    p.add_argument("--explore-samples", type=_nonneg, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
