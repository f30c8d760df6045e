"""Deterministic SVG rendering of scenes, construction traces and oracle solutions.

Output is a pure function of the inputs: layers are emitted in a fixed
order, objects in trace order, and every number is printed with six
decimals (negative zero printed as zero).  Group ids and label texts are
stable and meant to be consumed by other tools.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional
from xml.sax.saxutils import escape

from .apollonius_inversive import PipelineResult, Scene, TraceStep, scene_trace
from .apollonius_oracle import SolutionSet
from .errors import GeometryError
from .geom_core import Circle, Line2, Point2, Segment, foot_of_perpendicular

LAYERS: tuple[str, ...] = ("scene", "equal_circles", "loci", "inverted", "candidate", "oracle",
                           "labels")

_LAYER_OF_PROVENANCE = {
    "3.1.1": "scene", "4.2": "scene",
    "4.1": "equal_circles", "4.3": "equal_circles", "4.4": "equal_circles",
    "4.5": "equal_circles", "3.1.8": "equal_circles",
    "4.6": "loci",
    "4.7": "inverted", "4.8": "inverted", "4.9": "inverted",
    "4.10": "candidate",
    "3.2": "labels",
}

_STYLE = {
    "scene": 'stroke="#000000" stroke-width="2"',
    "equal_circles": 'stroke="#1f77b4" stroke-width="1"',
    "loci": 'stroke="#2ca02c" stroke-width="1" stroke-dasharray="6,3"',
    "inverted": 'stroke="#9467bd" stroke-width="1"',
    "candidate": 'stroke="#d62728" stroke-width="2.5"',
    "oracle": 'stroke="#ff7f0e" stroke-width="1" stroke-dasharray="2,2"',
    "labels": 'stroke="none" fill="#333333" font-family="sans-serif" font-size="12"',
}

MARKER_PX = 4.0


class EmptyRender(GeometryError):
    pass


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 1000
    height_px: int = 1000
    margin_fraction: float = 0.05
    layers: frozenset = field(default_factory=lambda: frozenset(LAYERS))

    def __post_init__(self):
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("image size must be positive")
        if not 0.0 <= self.margin_fraction <= 0.4:
            raise ValueError("margin_fraction must lie in [0, 0.4]")
        unknown = set(self.layers) - set(LAYERS)
        if unknown:
            raise ValueError(f"unknown layers: {sorted(unknown)}")


@dataclass(frozen=True)
class SvgDocument:
    text: str

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.text)


def fmt(v: float) -> str:
    s = f"{v:.6f}"
    if s.startswith("-") and float(s) == 0.0:
        s = s[1:]
    return s


class _Frame:
    """World-to-pixel mapping with the y axis pointing up."""

    def __init__(self, xmin, ymin, xmax, ymax, opts: RenderOptions):
        w = max(xmax - xmin, 1e-12)
        h = max(ymax - ymin, 1e-12)
        pad = opts.margin_fraction * max(w, h)
        self.x0, self.x1 = xmin - pad, xmax + pad
        self.y0, self.y1 = ymin - pad, ymax + pad
        self.s = min(opts.width_px / (self.x1 - self.x0), opts.height_px / (self.y1 - self.y0))
        self.ox = 0.5 * (opts.width_px - self.s * (self.x1 - self.x0))
        self.oy = 0.5 * (opts.height_px - self.s * (self.y1 - self.y0))

    def px(self, p: Point2) -> tuple[float, float]:
        return self.ox + (p.x - self.x0) * self.s, self.oy + (self.y1 - p.y) * self.s

    def clip(self, line: Line2) -> Optional[Segment]:
        p0, d = line.anchor(), line.direction
        lo, hi = -math.inf, math.inf
        for origin, delta, a, b in ((p0.x, d.x, self.x0, self.x1), (p0.y, d.y, self.y0, self.y1)):
            if abs(delta) < 1e-15:
                if not a <= origin <= b:
                    return None
                continue
            t1, t2 = (a - origin) / delta, (b - origin) / delta
            lo, hi = max(lo, min(t1, t2)), min(hi, max(t1, t2))
        if lo > hi:
            return None
        return Segment(p0 + d * lo, p0 + d * hi)


def _extent(geoms: Iterable) -> tuple[float, float, float, float]:
    xs, ys = [], []
    lines = []
    for g in geoms:
        if isinstance(g, Circle):
            xs += [g.center.x - g.radius, g.center.x + g.radius]
            ys += [g.center.y - g.radius, g.center.y + g.radius]
        elif isinstance(g, Point2):
            xs.append(g.x)
            ys.append(g.y)
        elif isinstance(g, Segment):
            xs += [g.p.x, g.q.x]
            ys += [g.p.y, g.q.y]
        elif isinstance(g, Line2):
            lines.append(g)
    if not xs:
        xs, ys = [0.0], [0.0]
    # each line must cross the frame: include its point nearest the content center
    c = Point2(0.5 * (min(xs) + max(xs)), 0.5 * (min(ys) + max(ys)))
    for line in lines:
        f = foot_of_perpendicular(c, line)
        xs.append(f.x)
        ys.append(f.y)
    return min(xs), min(ys), max(xs), max(ys)


def _element(step_id: str, g, frame: _Frame) -> str:
    if isinstance(g, Circle):
        x, y = frame.px(g.center)
        return f'<circle id="{step_id}" cx="{fmt(x)}" cy="{fmt(y)}" r="{fmt(g.radius * frame.s)}"/>'
    if isinstance(g, Point2):
        x, y = frame.px(g)
        m = MARKER_PX
        return (f'<path id="{step_id}" d="M {fmt(x - m)} {fmt(y)} L {fmt(x + m)} {fmt(y)} '
                f'M {fmt(x)} {fmt(y - m)} L {fmt(x)} {fmt(y + m)}"/>')
    if isinstance(g, Line2):
        g = frame.clip(g)
    x1, y1 = frame.px(g.p)
    x2, y2 = frame.px(g.q)
    return f'<line id="{step_id}" x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}"/>'


def _anchor(g, frame: _Frame) -> Point2:
    if isinstance(g, Circle):
        return g.center + Point2(0.0, g.radius)
    if isinstance(g, Point2):
        return g
    if isinstance(g, Line2):
        g = frame.clip(g)
    return g.midpoint


def layer_of(step: TraceStep) -> str:
    return _LAYER_OF_PROVENANCE[step.provenance]


def render(scene: Scene, result: Optional[PipelineResult] = None,
           oracle: Optional[SolutionSet] = None, opts: RenderOptions = RenderOptions()) -> SvgDocument:
    """Render the scene plus whichever of trace and oracle solutions are given."""
    if not opts.layers:
        raise EmptyRender("every layer is disabled")
    steps = result.trace.steps if result is not None else scene_trace(scene).steps
    drawn = [s for s in steps if s.kind != "label" and layer_of(s) in opts.layers]
    labeled = [s for s in steps if "labels" in opts.layers
               and (s.kind == "label" or layer_of(s) in opts.layers)]
    solutions = list(oracle) if oracle is not None and "oracle" in opts.layers else []

    geoms = [s.geometry for s in drawn] + [s.geometry for s in labeled if s.kind == "label"]
    geoms += [sol.circle for sol in solutions]
    if not geoms and not labeled:
        raise EmptyRender("nothing to draw in the enabled layers")
    if not geoms:
        geoms = [s.geometry for s in labeled]
    frame = _Frame(*_extent(geoms), opts)

    out = ['<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opts.width_px}" '
           f'height="{opts.height_px}" viewBox="0 0 {opts.width_px} {opts.height_px}">']
    for layer in LAYERS:
        if layer not in opts.layers:
            continue
        body = []
        if layer == "oracle":
            for k, sol in enumerate(solutions, 1):
                body.append(_element(f"oracle-{k}", sol.circle, frame))
        elif layer == "labels":
            for s in labeled:
                x, y = frame.px(_anchor(s.geometry, frame))
                body.append(f'<text id="label-{s.step_id}" x="{fmt(x + MARKER_PX)}" '
                            f'y="{fmt(y - MARKER_PX)}">{escape(s.label)}</text>')
        else:
            for s in drawn:
                if layer_of(s) == layer:
                    body.append(_element(f"step-{s.step_id}", s.geometry, frame))
        fill = "" if layer == "labels" else ' fill="none"'
        out.append(f'<g id="{layer}"{fill} {_STYLE[layer]}>')
        out.extend("  " + line for line in body)
        out.append("</g>")
    out.append("</svg>")
    return SvgDocument("\n".join(out) + "\n")
