"""Inversion in a circle, and its action on circles and lines."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import CenterHasNoImage, DimensionMismatch, GeometryError
from .geom_core import DEFAULT_TOL, Circle, Line2, Point2, Tolerance, power_of_point

GeneralizedCircle = Union[Circle, Line2]


@dataclass(frozen=True)
class InversionMap:
    center: Point2
    power: float  # k², the squared radius of the inversion circle

    def __post_init__(self):
        if not (math.isfinite(self.power) and self.power > 0):
            raise GeometryError(f"inversion power must be positive, got {self.power}")

    @property
    def radius(self) -> float:
        return math.sqrt(self.power)

    @property
    def circle(self) -> Circle:
        return Circle(self.center, self.radius)


def invert_point(m: InversionMap, p: Point2, tol: Tolerance = DEFAULT_TOL) -> Point2:
    d = p - m.center
    n2 = d.norm2()
    if math.sqrt(n2) <= tol.abs:
        raise CenterHasNoImage(f"{p} coincides with the inversion center")
    return m.center + d * (m.power / n2)


def invert_point_nd(center: Sequence[float], power: float, p: Sequence[float]) -> tuple[float, ...]:
    """Inversion in an (n-1)-sphere of squared radius ``power`` about ``center``."""
    if len(center) != len(p):
        raise DimensionMismatch(f"center has dimension {len(center)}, point {len(p)}")
    if not power > 0:
        raise GeometryError("inversion power must be positive")
    d = [pi - ci for pi, ci in zip(p, center)]
    n2 = math.fsum(x * x for x in d)
    if n2 == 0.0:
        raise CenterHasNoImage("point coincides with the inversion center")
    s = power / n2
    return tuple(ci + s * di for ci, di in zip(center, d))


def concentric_composition_ratio(k2: float, r2: float) -> float:
    """Scale factor of inversion with power ``r2`` followed by ``k2`` about one center."""
    if not (k2 > 0 and r2 > 0):
        raise GeometryError("powers must be positive")
    return k2 / r2


def homothety_circle(center: Point2, ratio: float, c: Circle) -> Circle:
    return Circle(center + (c.center - center) * ratio, abs(ratio) * c.radius)


def invert_generalized(m: InversionMap, g: GeneralizedCircle,
                       tol: Tolerance = DEFAULT_TOL) -> GeneralizedCircle:
    """Image of a circle or line.

    A circle that misses the center maps to a circle (a homothety of ratio
    k²/power); a circle through the center maps to a line; a line through
    the center is fixed; any other line maps to a circle through the center.
    """
    A = m.center
    if isinstance(g, Circle):
        p = power_of_point(A, g)
        if abs(p) > tol.area:
            return homothety_circle(A, m.power / p, g)
        # antipode of A on g lands on the image line
        axis = g.center - A
        if axis.norm() == 0.0:
            raise GeometryError("circle through its own center")
        u = axis * (1.0 / axis.norm())
        far = A + u * (2.0 * g.radius)
        image = invert_point(m, far, tol)
        return Line2(u, u.dot(image))
    if isinstance(g, Line2):
        delta = g.signed_distance(A)
        if abs(delta) <= tol.abs:
            return g
        # the foot of the perpendicular maps to the far end of a diameter
        diameter = m.power / abs(delta)
        toward = g.normal * (-math.copysign(1.0, delta))
        return Circle(A + toward * (0.5 * diameter), 0.5 * diameter)
    raise TypeError(f"cannot invert {type(g).__name__}")
