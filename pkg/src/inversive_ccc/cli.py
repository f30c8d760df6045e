"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 infeasible construction,
4 degenerate geometry, 5 unwritable output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

from . import report
from .apollonius_inversive import (
    VARIANTS,
    PipelineConfig,
    run_pipeline,
    validate_scene,
)
from .apollonius_oracle import solve_ccc
from .errors import ConstructionInfeasible, DegenerateInput, GeometryError
from .geom_core import Circle
from .trace_svg import LAYERS, RenderOptions, render

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_DEGENERATE = 4
EXIT_OUTPUT = 5

_FILE_OPTIONS = {"m_squared": float, "k_squared": float, "tangent_variant": str, "eps_rel": float}


class InputError(Exception):
    pass


class OutputError(Exception):
    pass


def _number(v, what):
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        raise InputError(f"{what} must be a finite number, got {v!r}")
    return float(v)


def load_scene_file(path: str) -> tuple[list[Circle], dict]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read scene file {path}: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("circles"), list):
        raise InputError('scene file must be an object with a "circles" array')
    if len(data["circles"]) != 3:
        raise InputError(f"expected exactly 3 circles, got {len(data['circles'])}")
    circles = []
    for k, c in enumerate(data["circles"], 1):
        if not isinstance(c, dict) or set(c) - {"cx", "cy", "r"} or len(c) != 3:
            raise InputError(f"circle {k} must have exactly the keys cx, cy, r")
        cx, cy, r = (_number(c[key], f"circle {k} {key}") for key in ("cx", "cy", "r"))
        if r <= 0:
            raise InputError(f"circle {k} radius must be positive")
        circles.append(Circle.of(cx, cy, r))
    options = {}
    for key, kind in _FILE_OPTIONS.items():
        if key in data:
            v = data[key]
            options[key] = _number(v, key) if kind is float else v
    unknown = set(data) - {"circles"} - set(_FILE_OPTIONS)
    if unknown:
        raise InputError(f"unknown scene keys: {sorted(unknown)}")
    return circles, options


def _config(args, options: dict, variant: Optional[str] = None) -> PipelineConfig:
    m2 = args.m2 if getattr(args, "m2", None) is not None else options.get("m_squared", 0.75)
    k2 = args.k2 if getattr(args, "k2", None) is not None else options.get("k_squared")
    v = variant or getattr(args, "variant", None) or options.get("tangent_variant", "outer_tangent")
    try:
        return PipelineConfig(m_squared=m2, k_squared=k2, tangent_variant=v,
                              eps_rel=_eps(args, options), scan=not getattr(args, "no_scan", False))
    except GeometryError as exc:
        raise InputError(str(exc)) from exc


def _eps(args, options: dict) -> float:
    eps = args.tol if getattr(args, "tol", None) is not None else options.get("eps_rel", 1e-9)
    if not 0.0 < eps <= 1e-3:
        raise InputError(f"tolerance must lie in (0, 1e-3], got {eps}")
    return eps


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc


def _scene(args):
    circles, options = load_scene_file(args.scene)
    return validate_scene(circles, _eps(args, options)), options


def cmd_solve(args) -> int:
    scene, options = _scene(args)
    eps = _eps(args, options)
    sols = solve_ccc(scene, eps)
    rep = report.make_report("solve", scene, eps, solutions=report.solutions_block(sols))
    _write(args.json, report.dumps(rep))
    return EXIT_OK


def cmd_construct(args) -> int:
    scene, options = _scene(args)
    config = _config(args, options)
    try:
        res = run_pipeline(scene, config)
    except ConstructionInfeasible as exc:
        rep = report.make_report("construct", scene, config.eps_rel,
                                 error=report.error_block(exc))
        _write(args.json, report.dumps(rep))
        raise
    rep = report.make_report("construct", scene, config.eps_rel,
                             construct=report.construct_block(res),
                             trace=report.trace_block(res.trace))
    _write(args.json, report.dumps(rep))
    if args.svg:
        _write(args.svg, render(scene, res).text)
    return EXIT_OK


def cmd_compare(args) -> int:
    scene, options = _scene(args)
    eps = _eps(args, options)
    sols = solve_ccc(scene, eps)
    variants = {}
    failures = []
    for v in VARIANTS:
        config = _config(args, options, variant=v)
        try:
            res = run_pipeline(scene, config)
        except ConstructionInfeasible as exc:
            failures.append(exc)
            variants[v] = {"error": report.error_block(exc)}
            continue
        variants[v] = report.compare_variant(res, sols)
    rep = report.make_report("compare", scene, eps, solutions=report.solutions_block(sols),
                             compare={"variants": variants})
    _write(args.json, report.dumps(rep))
    if len(failures) == len(VARIANTS):
        raise failures[0]
    return EXIT_OK


def cmd_render(args) -> int:
    scene, options = _scene(args)
    layers = [s.strip() for s in args.layers.split(",") if s.strip()]
    unknown = set(layers) - set(LAYERS)
    if unknown:
        raise InputError(f"unknown layers {sorted(unknown)}; choose from {', '.join(LAYERS)}")
    needs_pipeline = bool(set(layers) - {"scene", "oracle", "labels"})
    res = run_pipeline(scene, _config(args, options)) if needs_pipeline else None
    sols = solve_ccc(scene, _eps(args, options)) if "oracle" in layers else None
    doc = render(scene, res, sols, RenderOptions(layers=frozenset(layers)))
    _write(args.out, doc.text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inversive-ccc",
        description="Circles tangent to three given circles: algebraic oracle and "
                    "inversive straightedge-and-compass construction.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, construction=True):
        p.add_argument("scene", help="scene JSON file")
        p.add_argument("--tol", type=float, help="relative tolerance (default 1e-9)")
        if construction:
            p.add_argument("--m2", type=float, help="requested m² in (0, 1) (default 0.75)")
            p.add_argument("--k2", type=float, help="first inversion power k² (default: auto)")
            p.add_argument("--variant", choices=VARIANTS, help="tangent circle variant")
            p.add_argument("--no-scan", action="store_true",
                           help="use the requested m² as is, without the feasibility scan")

    p = sub.add_parser("solve", help="all tangent circles via the algebraic oracle")
    common(p, construction=False)
    p.add_argument("--json", help="report path (default stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("construct", help="run the inversive construction")
    common(p)
    p.add_argument("--json", help="report path (default stdout)")
    p.add_argument("--svg", help="also render the construction to this SVG file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("compare", help="construction (both variants) against the oracle")
    common(p)
    p.add_argument("--json", help="report path (default stdout)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("render", help="render scene, construction and solutions to SVG")
    common(p)
    p.add_argument("--layers", default="scene",
                   help=f"comma-separated layers from {','.join(LAYERS)} (default scene)")
    p.add_argument("--out", help="SVG path (default stdout)")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        code, msg = EXIT_INPUT, str(exc)
    except DegenerateInput as exc:
        code, msg = EXIT_DEGENERATE, f"degenerate scene: {exc}"
    except ConstructionInfeasible as exc:
        code, msg = EXIT_INFEASIBLE, f"construction infeasible: {exc}"
    except OutputError as exc:
        code, msg = EXIT_OUTPUT, str(exc)
    except GeometryError as exc:
        code, msg = EXIT_DEGENERATE, f"degenerate geometry: {exc}"
    print(f"inversive-ccc: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
