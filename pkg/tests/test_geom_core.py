import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inversive_ccc.errors import CoincidentPoints, CollinearPoints, ImaginaryCircle, ParallelLines
from inversive_ccc.geom_core import (
    Circle,
    GeneralForm,
    Line2,
    Point2,
    Tolerance,
    circle_from_general,
    circumcenter,
    collinear,
    foot_of_perpendicular,
    general_from_circle,
    line_intersection,
    perpendicular_bisector,
    power_of_point,
    scene_scale,
    tangency_classify,
)

coord = st.floats(-100, 100, allow_nan=False)
radius = st.floats(1e-3, 1e3, allow_nan=False)


def vertical(x):
    return Line2(Point2(1.0, 0.0), x)


def horizontal(y):
    return Line2(Point2(0.0, 1.0), y)


class TestGeneralForm:
    @pytest.mark.parametrize("g, center, r", [
        (GeneralForm(0, 0, -1), (0, 0), 1),
        (GeneralForm(-6, 0, 8), (3, 0), 1),
    ])
    def test_circle_from_general(self, g, center, r):
        c = circle_from_general(g)
        assert c.center.as_tuple() == pytest.approx(center)
        assert c.radius == pytest.approx(r)

    def test_imaginary(self):
        with pytest.raises(ImaginaryCircle):
            circle_from_general(GeneralForm(0, 0, 1))

    @pytest.mark.parametrize("c, g", [
        (Circle.of(0, 0, 1), (0, 0, -1)),
        (Circle.of(3, 0, 1), (-6, 0, 8)),
    ])
    def test_general_from_circle(self, c, g):
        gf = general_from_circle(c)
        assert (gf.a, gf.b, gf.c) == pytest.approx(g)

    @given(coord, coord, radius)
    def test_round_trip(self, x, y, r):
        c = Circle.of(x, y, r)
        back = circle_from_general(general_from_circle(c))
        assert back.center.dist(c.center) <= 1e-12 * max(1.0, abs(x), abs(y))
        # c = |O|² - r² cancels catastrophically when |O| >> r
        assert back.radius == pytest.approx(r, rel=1e-12, abs=1e-14 * (x * x + y * y) / r)

    def test_round_trip_general(self):
        g = GeneralForm(-6.0, 4.0, 8.0)
        back = general_from_circle(circle_from_general(g))
        assert (back.a, back.b, back.c) == pytest.approx((g.a, g.b, g.c), rel=1e-14)


class TestPower:
    @pytest.mark.parametrize("p, expected", [((0, 0), 8), ((3, 0), -1), ((2, 0), 0)])
    def test_examples(self, p, expected):
        assert power_of_point(Point2(*p), Circle.of(3, 0, 1)) == pytest.approx(expected, abs=1e-15)

    @given(coord, coord, radius, st.floats(0, 2 * math.pi))
    def test_zero_on_boundary(self, x, y, r, theta):
        c = Circle.of(x, y, r)
        tol = Tolerance.for_circles([c])
        assert abs(power_of_point(c.point_at(theta), c)) <= tol.area


class TestLines:
    def test_bisector_examples(self):
        assert perpendicular_bisector(Point2(0, 0), Point2(4, 0)).same_as(vertical(2), 1e-15)
        assert perpendicular_bisector(Point2(0, 0), Point2(0, 2)).same_as(horizontal(1), 1e-15)
        with pytest.raises(CoincidentPoints):
            perpendicular_bisector(Point2(0, 0), Point2(0, 0))

    @given(coord, coord, coord, coord, st.floats(-50, 50))
    def test_bisector_equidistant(self, ax, ay, bx, by, s):
        p, q = Point2(ax, ay), Point2(bx, by)
        if p.dist(q) < 1e-3:
            return
        line = perpendicular_bisector(p, q)
        X = line.anchor() + line.direction * s
        assert X.dist(p) == pytest.approx(X.dist(q), rel=1e-9, abs=1e-9)

    def test_intersection_examples(self):
        p = line_intersection(vertical(2), horizontal(3))
        assert p.as_tuple() == pytest.approx((2, 3))
        with pytest.raises(ParallelLines):
            line_intersection(vertical(1), vertical(2))
        p = line_intersection(Line2.from_normal(1, 3, 6), vertical(1.9))
        assert p.as_tuple() == pytest.approx((1.9, 4.1 / 3), rel=1e-14)

    def test_foot_examples(self):
        assert foot_of_perpendicular(Point2(5, 5), vertical(2)).as_tuple() == (2, 5)
        p = Point2(2, 7)
        assert foot_of_perpendicular(p, vertical(2)) == p
        f = foot_of_perpendicular(Point2(0, 0), Line2.from_normal(1, 1, 2))
        assert f.as_tuple() == pytest.approx((1, 1), rel=1e-15)

    @given(coord, coord, st.floats(0, 2 * math.pi), coord)
    def test_foot_properties(self, x, y, angle, offset):
        line = Line2(Point2(math.cos(angle), math.sin(angle)), offset)
        p = Point2(x, y)
        f = foot_of_perpendicular(p, line)
        assert abs(line.signed_distance(f)) <= 1e-12 * max(1, abs(x), abs(y), abs(offset))
        assert abs((p - f).cross(line.normal)) <= 1e-12 * max(1, abs(x), abs(y), abs(offset))


class TestTriangles:
    def test_circumcenter_examples(self):
        assert circumcenter(Point2(0, 0), Point2(4, 0), Point2(0, 4)).as_tuple() == pytest.approx((2, 2))
        c = circumcenter(Point2(0, 0), Point2(2, 0), Point2(1, math.sqrt(3)))
        assert c.as_tuple() == pytest.approx((1, 1 / math.sqrt(3)), rel=1e-14)
        with pytest.raises(CollinearPoints):
            circumcenter(Point2(0, 0), Point2(1, 0), Point2(2, 0))

    def test_circumcenter_equidistant_random(self):
        rng = random.Random(7)
        checked = 0
        while checked < 1000:
            pts = [Point2(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(3)]
            # stay away from near-collinear triples, where the center runs off to infinity
            area2 = abs((pts[1] - pts[0]).cross(pts[2] - pts[0]))
            if area2 < 1.0:
                continue
            tol = Tolerance(20 * math.sqrt(2))
            c = circumcenter(*pts, tol=tol)
            d = [c.dist(p) for p in pts]
            assert max(d) - min(d) < tol.abs
            checked += 1

    def test_collinear_examples(self):
        assert collinear(Point2(0, 0), Point2(1, 0), Point2(2, 0))
        assert not collinear(Point2(0, 0), Point2(4, 0), Point2(0, 4))
        assert collinear(Point2(0, 0), Point2(1, 1e-15), Point2(2, 0))


class TestTangency:
    def test_examples(self):
        t = tangency_classify(Circle.of(0, 0, 1), Circle.of(3, 0, 2))
        assert (t.kind, t.residual) == ("external", 0.0)
        t = tangency_classify(Circle.of(0, 0, 3), Circle.of(1, 0, 2))
        assert (t.kind, t.residual) == ("internal", 0.0)
        t = tangency_classify(Circle.of(0, 0, 1), Circle.of(10, 0, 1))
        assert (t.kind, t.residual) == ("none", 8.0)

    @given(coord, coord, radius, coord, coord, radius,
           st.floats(0, 2 * math.pi), coord, coord)
    @settings(max_examples=200)
    def test_rigid_motion_invariance(self, x1, y1, r1, x2, y2, r2, angle, tx, ty):
        c1, c2 = Circle.of(x1, y1, r1), Circle.of(x2, y2, r2)
        cos, sin = math.cos(angle), math.sin(angle)

        def move(c):
            p = c.center
            return Circle.of(cos * p.x - sin * p.y + tx, sin * p.x + cos * p.y + ty, c.radius)

        scale = scene_scale([c1, c2, move(c1), move(c2)])
        a = tangency_classify(c1, c2).residual
        b = tangency_classify(move(c1), move(c2)).residual
        assert abs(a - b) < 1e-12 * scale
