"""Inversive construction of circles tangent to three given circles."""

from .apollonius_inversive import (
    PipelineConfig,
    PipelineResult,
    ResidualReport,
    Scene,
    choose_feasible_m2,
    run_pipeline,
    validate_scene,
)
from .apollonius_oracle import SolutionSet, nearest_solution, solve_ccc, verify_candidate
from .geom_core import Circle, Line2, Point2, Tolerance
from .inversion import InversionMap, invert_generalized, invert_point
from .trace_svg import RenderOptions, render

__all__ = [
    "Circle", "Line2", "Point2", "Tolerance", "InversionMap", "invert_point",
    "invert_generalized", "Scene", "validate_scene", "PipelineConfig", "PipelineResult",
    "ResidualReport", "choose_feasible_m2", "run_pipeline", "SolutionSet", "solve_ccc",
    "verify_candidate", "nearest_solution", "RenderOptions", "render",
]
