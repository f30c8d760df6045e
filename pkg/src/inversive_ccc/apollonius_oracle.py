"""Algebraic solver for circles tangent to three given circles.

For a sign triple s the unknown circle (x, y, r) satisfies

    (x - x_i)² + (y - y_i)² = (r + s_i·r_i)²,   i = 1, 2, 3

with s_i = +1 for external and -1 for internal tangency.  Differences of
the equations are linear in (x, y, r), so the solutions of one sign case
lie on a line in (x, y, r)-space; substituting that line into the first
equation leaves a quadratic.  Each root is polished with Newton steps on
the full system and then verified.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .apollonius_inversive import Scene
from .errors import EmptySolutionSet
from .geom_core import Circle, Line2, Point2, TangencyClass, Tolerance, line_circle_residual, \
    tangency_classify, tangency_residual
from .inversion import GeneralizedCircle

SIGN_TRIPLES: tuple[tuple[int, int, int], ...] = tuple(itertools.product((1, -1), repeat=3))
DEDUP_REL = 1e-7
NEWTON_STEPS = 4


@dataclass(frozen=True)
class SignedSolution:
    circle: Circle
    signs: tuple[int, int, int]
    residual: float


@dataclass(frozen=True)
class SolutionSet:
    solutions: tuple[SignedSolution, ...]
    scale: float
    tolerance: float

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)


def _signed_residual(circle: Circle, c: Circle, sign: int) -> float:
    ext, inn = tangency_residual(circle, c)
    return ext if sign > 0 else inn


def _line_of_solutions(X, Y, Rs):
    """Particular point and direction of the solution line in (x, y, r)."""
    rows = np.array([[2 * (X[k] - X[0]), 2 * (Y[k] - Y[0]), 2 * (Rs[k] - Rs[0])]
                     for k in (1, 2)])
    rhs = np.array([X[k] ** 2 - X[0] ** 2 + Y[k] ** 2 - Y[0] ** 2 - Rs[k] ** 2 + Rs[0] ** 2
                    for k in (1, 2)])
    direction = np.cross(rows[0], rows[1])
    scale = np.linalg.norm(rows[0]) * np.linalg.norm(rows[1])
    if np.linalg.norm(direction) <= 1e-12 * scale:
        return None
    # minimum-norm particular solution
    gram = rows @ rows.T
    p0 = rows.T @ np.linalg.solve(gram, rhs)
    return p0, direction / np.linalg.norm(direction)


def _quadratic_roots(a: float, b: float, c: float) -> list[float]:
    size = max(abs(a), abs(b), abs(c))
    if size == 0.0:
        return []
    if abs(a) <= 1e-14 * size:
        return [] if b == 0.0 else [-c / b]
    disc = b * b - 4 * a * c
    if disc < 0:
        # a slightly negative discriminant is a rounded double root
        if disc < -1e-10 * (b * b + abs(4 * a * c)):
            return []
        disc = 0.0
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    roots = [q / a]
    if q != 0.0:
        roots.append(c / q)
    return roots


def _newton(v, X, Y, Rs):
    for _ in range(NEWTON_STEPS):
        x, y, r = v
        F = np.array([(x - X[i]) ** 2 + (y - Y[i]) ** 2 - (r + Rs[i]) ** 2 for i in range(3)])
        J = np.array([[2 * (x - X[i]), 2 * (y - Y[i]), -2 * (r + Rs[i])] for i in range(3)])
        try:
            step = np.linalg.solve(J, F)
        except np.linalg.LinAlgError:
            break
        if not np.all(np.isfinite(step)):
            break
        v = v - step
    return v


def _solve_signs(scene: Scene, signs, tol: Tolerance) -> list[SignedSolution]:
    X = [c.center.x for c in scene.circles]
    Y = [c.center.y for c in scene.circles]
    # solve (x, y, ρ) with ρ = r and signed radii s_i·r_i
    Rs = [s * c.radius for s, c in zip(signs, scene.circles)]
    line = _line_of_solutions(X, Y, Rs)
    if line is None:
        return []
    p0, q = line
    # substitute p0 + λq into the first equation
    dx, dy, dr = p0[0] - X[0], p0[1] - Y[0], p0[2] + Rs[0]
    a = q[0] ** 2 + q[1] ** 2 - q[2] ** 2
    b = 2 * (dx * q[0] + dy * q[1] - dr * q[2])
    c = dx * dx + dy * dy - dr * dr
    out = []
    for lam in _quadratic_roots(a, b, c):
        v = _newton(p0 + lam * q, X, Y, Rs)
        x, y, r = (float(t) for t in v)
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(r)) or r <= tol.abs:
            continue
        circle = Circle(Point2(x, y), r)
        residual = max(_signed_residual(circle, C, s) for C, s in zip(scene.circles, signs))
        if residual <= tol.abs:
            out.append(SignedSolution(circle, tuple(signs), residual))
    return out


def solve_ccc(scene: Scene, eps_rel: float = 1e-9) -> SolutionSet:
    """All circles tangent to the three circles of ``scene`` (at most eight)."""
    tol = scene.tolerance(eps_rel)
    dedup = DEDUP_REL * tol.scale

    def same(a: Circle, b: Circle) -> bool:
        return a.center.dist(b.center) < dedup and abs(a.radius - b.radius) < dedup

    found: list[SignedSolution] = []
    for signs in SIGN_TRIPLES:
        for sol in _solve_signs(scene, signs, tol):
            # an input circle trivially "touches" itself and its tangent neighbours
            if any(same(sol.circle, C) for C in scene.circles):
                continue
            if any(same(sol.circle, f.circle) for f in found):
                continue
            found.append(sol)
    found.sort(key=lambda s: (s.circle.radius, s.circle.center.x, s.circle.center.y))
    return SolutionSet(tuple(found), tol.scale, tol.abs)


def verify_candidate(candidate: GeneralizedCircle, scene: Scene,
                     eps_rel: float = 1e-9) -> tuple[TangencyClass, TangencyClass, TangencyClass]:
    """Per-circle tangency of a candidate against the scene.

    A line never counts as a solution; its residual is the distance defect
    ``| dist(center, line) - r_i |``.
    """
    tol = scene.tolerance(eps_rel)
    if isinstance(candidate, Line2):
        return tuple(TangencyClass("none", line_circle_residual(candidate, C))
                     for C in scene.circles)
    return tuple(tangency_classify(candidate, C, tol) for C in scene.circles)


def solution_metric(a: Circle, b: Circle) -> float:
    return a.center.dist(b.center) + abs(a.radius - b.radius)


def nearest_solution(candidate: Circle, solutions: SolutionSet) -> tuple[SignedSolution, float]:
    if not len(solutions):
        raise EmptySolutionSet("no solutions to compare against")
    best: Optional[tuple[SignedSolution, float]] = None
    for sol in solutions:
        d = solution_metric(candidate, sol.circle)
        if best is None or d < best[1]:
            best = (sol, d)
    return best
