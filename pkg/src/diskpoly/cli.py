"""Command-line front end: measure instances, compute duals, sweep closed
forms, run verification suites, searches, and the perimeter probe."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import closed_forms as forms
from . import duality, measures, verification
from .errors import BadInput, DiskPolygonError
from .geometry import DEFAULT_TOL, Point, build_disk_polygon, centers_from_json

_CSV_COLUMNS = ["d", "inradius", "width", "area", "perimeter", "dual_diameter", "case1_bound"]


def _read_centers(path: str) -> list[Point]:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return centers_from_json(text)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        raise BadInput(f"cannot read centers from {path}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _csv_rows(rows: list[list[float]]) -> str:
    lines = [",".join(_CSV_COLUMNS)]
    for row in rows:
        lines.append(",".join(f"{v:.12f}" for v in row))
    return "\n".join(lines) + "\n"


def cmd_measure(args: argparse.Namespace) -> int:
    poly = build_disk_polygon(_read_centers(args.centers), DEFAULT_TOL)
    report = measures.measure_report(poly)
    _emit(_json(report.to_json_dict()), args.out)
    return 0


def cmd_dual(args: argparse.Namespace) -> int:
    poly = build_disk_polygon(_read_centers(args.centers), DEFAULT_TOL)
    dual_poly = duality.dual(poly)
    doc = {
        "dual_centers": [[c.x, c.y] for c in dual_poly.centers],
        "primal_report": measures.measure_report(poly).to_json_dict(),
        "dual_report": measures.measure_report(dual_poly).to_json_dict(),
    }
    _emit(_json(doc), args.out)
    return 0


def cmd_forms(args: argparse.Namespace) -> int:
    if args.steps < 1:
        raise BadInput("--steps must be >= 1")
    grid = np.linspace(args.d_min, args.d_max, args.steps)
    rows = []
    for d in grid:
        p = forms.extremal_profile(float(d))
        case1 = 0.25 * np.pi * p.minimal_width**2
        rows.append([p.d, p.inradius, p.minimal_width, p.area, p.perimeter, p.dual_diameter, case1])
    if args.format == "csv":
        _emit(_csv_rows(rows), args.out)
    else:
        _emit(_json({"profiles": [dict(zip(_CSV_COLUMNS, row)) for row in rows]}), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = verification.run_suite(args.d, args.instances, args.seed, args.n)
    summary = verification.summarize(results)
    lines = verification.results_to_json_lines(results)
    if args.out:
        Path(args.out).write_text(lines + "\n")
        sys.stdout.write(_json({"summary": summary}))
    else:
        sys.stdout.write(lines + "\n")
        sys.stdout.write(_json({"summary": summary}))
    all_pass = all(r.passed for r in results)
    return 0 if all_pass else 1


def cmd_search(args: argparse.Namespace) -> int:
    cfg = verification.SearchConfig(
        d=args.d,
        n_centers=args.n,
        restarts=args.restarts,
        steps=args.steps,
        seed=args.seed,
    )
    result = verification.local_search_min_area(cfg)
    floor = forms.disk_triangle_area(args.d)
    doc = {
        "best_centers": [[c.x, c.y] for c in result.best.centers],
        "best_area": result.best_value,
        "reference_area": floor,
        "min_area_seen": result.min_value_seen,
        "floor_respected": result.min_value_seen >= floor - DEFAULT_TOL.eps_check,
    }
    sys.stdout.write(_json(doc))
    if args.out:
        lines = ["step,area"] + [f"{s},{a:.12f}" for s, a in result.trace]
        Path(args.out).write_text("\n".join(lines) + "\n")
    return 0 if doc["floor_respected"] else 1


def cmd_probe(args: argparse.Namespace) -> int:
    cfg = verification.SearchConfig(
        d=args.d,
        n_centers=args.n,
        restarts=args.restarts,
        steps=args.steps,
        seed=args.seed,
    )
    report = verification.perimeter_probe(args.d, cfg)
    _emit(_json(report), args.out)
    if args.out:
        # each counterexample candidate also lands in its own center-set file
        base = Path(args.out)
        for cand in report["counterexample_candidates"]:
            side = base.with_name(f"{base.stem}-counterexample-{cand['digest']}.json")
            side.write_text(json.dumps({"centers": cand["centers"]}) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diskpoly",
        description="Disk-polygon construction, measures, and numerical verification.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("measure", help="measure a center set")
    p.add_argument("--centers", required=True, help="JSON file with {'centers': [[x,y],...]}, or - for stdin")
    p.add_argument("--out")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("dual", help="dual center set plus both measure reports")
    p.add_argument("--centers", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("forms", help="closed-form profile sweep over d")
    p.add_argument("--d-min", type=float, required=True)
    p.add_argument("--d-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_forms)

    p = sub.add_parser("verify", help="identity and floor suites on random instances")
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=10, help="max generators per instance")
    p.add_argument("--out", help="write per-check JSON lines here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="multi-start area minimization")
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the improvement trace CSV here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("probe", help="perimeter probe for the open floor questions")
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--steps", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_probe)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except BadInput as exc:
        sys.stderr.write(_json({"error": "BadInput", "message": str(exc)}))
        return 2
    except DiskPolygonError as exc:
        sys.stderr.write(_json({"error": type(exc).__name__, "message": str(exc)}))
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
