"""Plane primitives: points, circles, lines, powers and tangency.

Every predicate takes an explicit :class:`Tolerance`.  The tolerance is
scene-scaled so that results do not depend on where the scene sits or how
large it is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal

from .errors import (
    CoincidentPoints,
    CollinearPoints,
    GeometryError,
    ImaginaryCircle,
    ParallelLines,
)


def _finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not _finite(self.x, self.y):
            raise GeometryError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, other: Point2) -> Point2:
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point2) -> Point2:
        return Point2(self.x - other.x, self.y - other.y)

    def __mul__(self, s: float) -> Point2:
        return Point2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __neg__(self) -> Point2:
        return Point2(-self.x, -self.y)

    def dot(self, other: Point2) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point2) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def norm2(self) -> float:
        return self.x * self.x + self.y * self.y

    def dist(self, other: Point2) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def perp(self) -> Point2:
        """Rotate by +90 degrees."""
        return Point2(-self.y, self.x)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class Circle:
    center: Point2
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise GeometryError(f"circle radius must be positive and finite, got {self.radius}")

    @classmethod
    def of(cls, cx: float, cy: float, r: float) -> Circle:
        return cls(Point2(float(cx), float(cy)), float(r))

    def point_at(self, theta: float) -> Point2:
        return Point2(self.center.x + self.radius * math.cos(theta),
                      self.center.y + self.radius * math.sin(theta))


@dataclass(frozen=True)
class GeneralForm:
    """Coefficients of x² + y² + a·x + b·y + c = 0."""

    a: float
    b: float
    c: float

    @property
    def discriminant(self) -> float:
        return 0.25 * (self.a * self.a + self.b * self.b) - self.c


@dataclass(frozen=True)
class Line2:
    """The line {P : normal·P = offset} with a unit normal."""

    normal: Point2
    offset: float

    def __post_init__(self):
        if abs(self.normal.norm() - 1.0) > 1e-9:
            raise GeometryError(f"line normal is not unit length: {self.normal}")
        if not math.isfinite(self.offset):
            raise GeometryError("non-finite line offset")

    @classmethod
    def from_normal(cls, nx: float, ny: float, offset: float) -> Line2:
        n = math.hypot(nx, ny)
        if n == 0.0:
            raise GeometryError("zero normal")
        return cls(Point2(nx / n, ny / n), offset / n)

    @classmethod
    def through(cls, p: Point2, q: Point2) -> Line2:
        d = q - p
        if d.norm() == 0.0:
            raise CoincidentPoints("a line needs two distinct points")
        n = d.perp() * (1.0 / d.norm())
        return cls(n, n.dot(p))

    @property
    def direction(self) -> Point2:
        return Point2(self.normal.y, -self.normal.x)

    def signed_distance(self, p: Point2) -> float:
        return self.normal.dot(p) - self.offset

    def anchor(self) -> Point2:
        """Point of the line closest to the origin."""
        return self.normal * self.offset

    def same_as(self, other: Line2, tol: float) -> bool:
        """Unoriented comparison: same point set up to ``tol``."""
        s = 1.0 if self.normal.dot(other.normal) >= 0 else -1.0
        return (abs(self.normal.cross(other.normal)) <= tol
                and abs(self.offset - s * other.offset) <= tol)


@dataclass(frozen=True)
class Segment:
    p: Point2
    q: Point2

    @property
    def midpoint(self) -> Point2:
        return (self.p + self.q) * 0.5


@dataclass(frozen=True)
class Tolerance:
    scale: float = 1.0
    eps_rel: float = 1e-9

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise GeometryError(f"tolerance scale must be positive, got {self.scale}")
        if not (0.0 < self.eps_rel <= 1e-3):
            raise GeometryError(f"eps_rel must lie in (0, 1e-3], got {self.eps_rel}")

    @property
    def abs(self) -> float:
        return self.eps_rel * max(self.scale, 1.0)

    @property
    def area(self) -> float:
        """Threshold for squared-length quantities such as powers."""
        return self.eps_rel * max(self.scale, 1.0) ** 2

    @classmethod
    def for_circles(cls, circles: Iterable[Circle], eps_rel: float = 1e-9) -> Tolerance:
        return cls(scene_scale(circles), eps_rel)


DEFAULT_TOL = Tolerance()


def scene_scale(circles: Iterable[Circle]) -> float:
    """Diagonal of the bounding box of the given circles."""
    circles = list(circles)
    if not circles:
        raise GeometryError("empty scene")
    xmin = min(c.center.x - c.radius for c in circles)
    xmax = max(c.center.x + c.radius for c in circles)
    ymin = min(c.center.y - c.radius for c in circles)
    ymax = max(c.center.y + c.radius for c in circles)
    return math.hypot(xmax - xmin, ymax - ymin)


@dataclass(frozen=True)
class TangencyClass:
    kind: Literal["external", "internal", "none"]
    residual: float


def circle_from_general(g: GeneralForm, tol: Tolerance = DEFAULT_TOL) -> Circle:
    disc = g.discriminant
    if not disc > tol.abs ** 2:
        raise ImaginaryCircle(f"x²+y²+{g.a}x+{g.b}y+{g.c}=0 has no real points (disc={disc})")
    return Circle(Point2(-0.5 * g.a, -0.5 * g.b), math.sqrt(disc))


def general_from_circle(c: Circle) -> GeneralForm:
    cx, cy = c.center.x, c.center.y
    return GeneralForm(-2.0 * cx, -2.0 * cy, cx * cx + cy * cy - c.radius * c.radius)


def power_of_point(p: Point2, c: Circle) -> float:
    """Signed power: negative inside, zero on the circle, positive outside."""
    d = p - c.center
    # (d - r)(d + r) keeps precision near the boundary
    n = d.norm()
    return (n - c.radius) * (n + c.radius)


def perpendicular_bisector(p: Point2, q: Point2, tol: Tolerance = DEFAULT_TOL) -> Line2:
    d = q - p
    length = d.norm()
    if length <= tol.abs:
        raise CoincidentPoints(f"{p} and {q} coincide")
    n = d * (1.0 / length)
    mid = (p + q) * 0.5
    return Line2(n, n.dot(mid))


def collinear(p1: Point2, p2: Point2, p3: Point2, tol: Tolerance = DEFAULT_TOL) -> bool:
    area2 = abs((p2 - p1).cross(p3 - p1))
    longest = max(p1.dist(p2), p2.dist(p3), p1.dist(p3))
    return area2 <= tol.abs * longest


def circumcenter(p1: Point2, p2: Point2, p3: Point2, tol: Tolerance = DEFAULT_TOL) -> Point2:
    if collinear(p1, p2, p3, tol):
        raise CollinearPoints(f"{p1}, {p2}, {p3} are collinear")
    # translate to p1 for conditioning
    b = p2 - p1
    c = p3 - p1
    d = 2.0 * b.cross(c)
    b2, c2 = b.norm2(), c.norm2()
    ux = (c.y * b2 - b.y * c2) / d
    uy = (b.x * c2 - c.x * b2) / d
    return Point2(p1.x + ux, p1.y + uy)


def line_intersection(l1: Line2, l2: Line2, tol: Tolerance = DEFAULT_TOL) -> Point2:
    det = l1.normal.cross(l2.normal)
    if abs(det) <= tol.eps_rel:
        raise ParallelLines("lines are parallel")
    n1, n2 = l1.normal, l2.normal
    x = (l1.offset * n2.y - l2.offset * n1.y) / det
    y = (n1.x * l2.offset - n2.x * l1.offset) / det
    return Point2(x, y)


def foot_of_perpendicular(p: Point2, line: Line2) -> Point2:
    return p - line.normal * line.signed_distance(p)


def tangency_residual(c1: Circle, c2: Circle) -> tuple[float, float]:
    """(external defect, internal defect) for two circles."""
    d = c1.center.dist(c2.center)
    return abs(d - (c1.radius + c2.radius)), abs(d - abs(c1.radius - c2.radius))


def tangency_classify(c1: Circle, c2: Circle, tol: Tolerance = DEFAULT_TOL) -> TangencyClass:
    ext, inn = tangency_residual(c1, c2)
    residual = min(ext, inn)
    if residual > tol.abs:
        return TangencyClass("none", residual)
    return TangencyClass("external" if ext <= inn else "internal", residual)


def line_circle_residual(line: Line2, c: Circle) -> float:
    """Tangency defect between a line and a circle."""
    return abs(abs(line.signed_distance(c.center)) - c.radius)
