"""Scenes shared by the test modules."""

import math
import random

from inversive_ccc.apollonius_inversive import run_pipeline, validate_scene
from inversive_ccc.errors import GeometryError
from inversive_ccc.geom_core import Circle

PINNED = [(0.0, 0.0, 1.0), (5.0, 0.0, 2.0), (2.0, 6.0, 3.0)]
SODDY = [(0.0, 0.0, 1.0), (2.0, 0.0, 1.0), (1.0, math.sqrt(3.0), 1.0)]
EQUILATERAL = [(0.0, 0.0, 1.0), (4.0, 0.0, 1.0), (2.0, 2.0 * math.sqrt(3.0), 1.0)]
COLLINEAR = [(0.0, 0.0, 1.0), (2.5, 0.0, 1.2), (6.0, 0.0, 2.0)]
COLLINEAR_EQUAL = [(0.0, 0.0, 1.0), (4.0, 0.0, 1.0), (9.0, 0.0, 1.0)]
CONCENTRIC = [(0.0, 0.0, 1.0), (0.0, 0.0, 2.0), (5.0, 0.0, 1.0)]
NESTED = [(0.0, 0.0, 5.0), (1.0, 0.0, 0.5), (20.0, 0.0, 1.0)]


def scene_of(triples):
    return validate_scene([Circle.of(*t) for t in triples])


def scene_dict(triples):
    return {"circles": [{"cx": x, "cy": y, "r": r} for x, y, r in triples]}


def random_circles(rng):
    return [Circle.of(rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(0.5, 3.0))
            for _ in range(3)]


def feasible_runs(n, seed=20261016, **config):
    """First ``n`` random scenes the construction accepts, with their results."""
    from inversive_ccc.apollonius_inversive import PipelineConfig

    rng = random.Random(seed)
    cfg = PipelineConfig(**config)
    out = []
    while len(out) < n:
        try:
            scene = validate_scene(random_circles(rng))
            out.append((scene, run_pipeline(scene, cfg)))
        except GeometryError:
            continue
    return out
