"""JSON report serialization.

Reports are data: floats keep Python's shortest round-trip repr and keys are
sorted, so ``dumps(loads(text)) == text``.
"""

from __future__ import annotations

import json
import math
from typing import Any, Optional

from .apollonius_inversive import ConstructionTrace, PipelineResult, ResidualReport, Scene
from .apollonius_oracle import SignedSolution, SolutionSet, nearest_solution, verify_candidate
from .geom_core import Circle, Line2, Point2, Segment

SCHEMA_VERSION = "1"


def geometry(g) -> dict:
    if isinstance(g, Circle):
        return {"type": "circle", "cx": g.center.x, "cy": g.center.y, "r": g.radius}
    if isinstance(g, Line2):
        return {"type": "line", "nx": g.normal.x, "ny": g.normal.y, "offset": g.offset}
    if isinstance(g, Point2):
        return {"type": "point", "x": g.x, "y": g.y}
    if isinstance(g, Segment):
        return {"type": "segment", "x1": g.p.x, "y1": g.p.y, "x2": g.q.x, "y2": g.q.y}
    raise TypeError(f"cannot serialize {type(g).__name__}")


def parse_geometry(d: dict):
    kind = d["type"]
    if kind == "circle":
        return Circle.of(d["cx"], d["cy"], d["r"])
    if kind == "line":
        return Line2(Point2(d["nx"], d["ny"]), d["offset"])
    if kind == "point":
        return Point2(d["x"], d["y"])
    if kind == "segment":
        return Segment(Point2(d["x1"], d["y1"]), Point2(d["x2"], d["y2"]))
    raise ValueError(f"unknown geometry type {kind!r}")


def _finite_or_none(v: float) -> Optional[float]:
    return v if math.isfinite(v) else None


def scene_block(scene: Scene, eps_rel: float) -> dict:
    tol = scene.tolerance(eps_rel)
    return {
        "circles": [{"cx": c.center.x, "cy": c.center.y, "r": c.radius} for c in scene.circles],
        "scale": tol.scale,
        "tolerance": tol.abs,
    }


def solution(s: SignedSolution) -> dict:
    c = s.circle
    return {"cx": c.center.x, "cy": c.center.y, "r": c.radius, "signs": list(s.signs),
            "residual": s.residual}


def solutions_block(sols: SolutionSet) -> list:
    return [solution(s) for s in sols]


def residuals_block(r: ResidualReport) -> dict:
    return {
        "power_ratio_dev": r.power_ratio_dev,
        "concurrency_dev": r.concurrency_dev,
        "c4_tangency": list(r.c4_tangency),
        "c4p_tangency": list(r.c4p_tangency),
        "second_inversion_dev": [_finite_or_none(v) for v in r.second_inversion_dev],
        "final_tangency": list(r.final_tangency),
        "final_tangency_pass": r.final_tangency_pass,
    }


def trace_block(trace: ConstructionTrace) -> list:
    return [{"step_id": s.step_id, "kind": s.kind, "label": s.label,
             "provenance": s.provenance, "refs": list(s.refs), "geometry": geometry(s.geometry)}
            for s in trace.steps]


def construct_block(res: PipelineResult) -> dict:
    A = res.reflection_center
    return {
        "A": {"x": A.x, "y": A.y},
        "m_squared": res.m_squared,
        "m_squared_requested": res.config.m_squared,
        "m_squared_onset": res.onset,
        "scan": res.config.scan,
        "shrink_radius": res.shrink_radius,
        "k2": res.k2,
        "kp2": res.kp2,
        "tangent_variant": res.config.tangent_variant,
        "collinear": res.collinear,
        "locus_lines": [geometry(l) for l in res.locus_lines],
        "equal_circles": [geometry(c) for c in res.equal_circles],
        "c4": geometry(res.c4),
        "inverted_equal": [geometry(g) for g in res.inverted_equal],
        "c4p": geometry(res.c4p),
        "second_images": [geometry(g) for g in res.second_images],
        "c4pp": geometry(res.c4pp),
        "residuals": residuals_block(res.residuals),
        "scan_diagnostics": list(res.diagnostics),
    }


def compare_variant(res: PipelineResult, sols: SolutionSet) -> dict:
    checks = verify_candidate(res.c4pp, res.scene, res.config.eps_rel)
    nearest = None
    if isinstance(res.c4pp, Circle) and len(sols):
        best, metric = nearest_solution(res.c4pp, sols)
        nearest = {"metric": metric, "solution": solution(best)}
    return {
        "m_squared": res.m_squared,
        "c4pp": geometry(res.c4pp),
        "final_tangency": list(res.residuals.final_tangency),
        "final_tangency_pass": res.residuals.final_tangency_pass,
        "verify": [{"kind": c.kind, "residual": c.residual} for c in checks],
        "nearest": nearest,
        "error": None,
    }


def error_block(exc: Exception) -> dict:
    return {"type": type(exc).__name__, "message": str(exc),
            "diagnostics": list(getattr(exc, "diagnostics", []))}


def make_report(command: str, scene: Scene, eps_rel: float, **blocks: Any) -> dict:
    report = {"schema_version": SCHEMA_VERSION, "command": command,
              "scene": scene_block(scene, eps_rel)}
    report.update({k: v for k, v in blocks.items() if v is not None})
    return report


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, allow_nan=False) + "\n"
