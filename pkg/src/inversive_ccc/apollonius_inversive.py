"""Inversive construction of a circle tangent to three given circles.

The construction shrinks every given circle to a common radius ``R`` about
its own center, draws the circle ``C4`` tangent to the three equal circles,
inverts everything about a reflection center ``A`` with power ``k²`` and
then inverts ``C4'`` a second time with power ``k'² = sqrt(m²)·k²`` to get
the candidate ``C''4``.

``A`` is the common point of three locus lines: the points whose powers with
respect to ``C_i`` and the shrunken ``uC_i`` have ratio ``m²`` for every i.
Once ``m²`` is fixed, ``R`` follows from ``A``; it is not a free choice.

Whether ``C''4`` really touches the given circles is measured in
:class:`ResidualReport`, never assumed.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Literal, Optional, Sequence, Union

from .errors import (
    CenterOnObject,
    ConcentricInput,
    ConstructionInfeasible,
    DuplicateCircle,
    GeometryError,
    InfeasibleShrink,
    NestedInput,
    NoFeasibleM2,
    ParallelLoci,
    TangentRadiusNonpositive,
)
from .geom_core import (
    Circle,
    Line2,
    Point2,
    Segment,
    Tolerance,
    circumcenter,
    collinear,
    foot_of_perpendicular,
    line_circle_residual,
    line_intersection,
    perpendicular_bisector,
    power_of_point,
    scene_scale,
    tangency_classify,
)
from .inversion import GeneralizedCircle, InversionMap, invert_generalized

log = logging.getLogger(__name__)

Variant = Literal["outer_tangent", "enclosing"]
VARIANTS: tuple[str, ...] = ("outer_tangent", "enclosing")

M2_GRID: tuple[float, ...] = tuple(round(0.05 * k, 2) for k in range(1, 20))
BISECT_TOL = 1e-6

# locus-line pairs in the order K2-K1, K3-K2, K3-K1
LOCUS_PAIRS: tuple[tuple[int, int], ...] = ((0, 1), (1, 2), (0, 2))


# --------------------------------------------------------------------------
# scene

@dataclass(frozen=True)
class Scene:
    """Three circles sorted by radius, smallest first."""

    circles: tuple[Circle, Circle, Circle]

    @property
    def centers(self) -> tuple[Point2, Point2, Point2]:
        return tuple(c.center for c in self.circles)

    @property
    def radii(self) -> tuple[float, float, float]:
        return tuple(c.radius for c in self.circles)

    @property
    def scale(self) -> float:
        return scene_scale(self.circles)

    def tolerance(self, eps_rel: float = 1e-9) -> Tolerance:
        return Tolerance(self.scale, eps_rel)


def _inside(inner: Circle, outer: Circle, tol: Tolerance) -> bool:
    return inner.center.dist(outer.center) + inner.radius < outer.radius - tol.abs


def validate_scene(circles: Sequence[Circle], eps_rel: float = 1e-9) -> Scene:
    """Sort three circles by radius and reject unconstructible layouts.

    Rejected: duplicates, concentric pairs, and a circle strictly inside
    another while the third circle is not inside that same container (no
    circle can then touch all three).
    """
    circles = list(circles)
    if len(circles) != 3 or not all(isinstance(c, Circle) for c in circles):
        raise GeometryError("a scene needs exactly three circles")
    ordered = sorted(circles, key=lambda c: c.radius)
    tol = Tolerance.for_circles(ordered, eps_rel)
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = ordered[i], ordered[j]
            if a.center.dist(b.center) <= tol.abs:
                if abs(a.radius - b.radius) <= tol.abs:
                    raise DuplicateCircle(f"circles {i + 1} and {j + 1} coincide")
                raise ConcentricInput(f"circles {i + 1} and {j + 1} are concentric")
    for i in range(3):
        for j in range(3):
            if i == j or not _inside(ordered[i], ordered[j], tol):
                continue
            k = 3 - i - j
            if not _inside(ordered[k], ordered[j], tol):
                raise NestedInput(
                    f"circle {i + 1} lies inside circle {j + 1} while circle {k + 1} does not")
    return Scene(tuple(ordered))


# --------------------------------------------------------------------------
# reflection center and shrink radius

def difference_line(scene: Scene, i: int, j: int, m_squared: float) -> Line2:
    """Locus {X : |XO_j|² - |XO_i|² = (R_j² - R_i²)/(1 - m²)} (0-based indices)."""
    Oi, Oj = scene.centers[i], scene.centers[j]
    Ri, Rj = scene.radii[i], scene.radii[j]
    d = Oj - Oi
    length = d.norm()
    if length == 0.0:
        raise GeometryError(f"centers {i + 1} and {j + 1} coincide")
    n = d * (1.0 / length)
    t = 1.0 / (1.0 - m_squared)
    mid = (Oi + Oj) * 0.5
    return Line2(n, n.dot(mid) - t * (Rj * Rj - Ri * Ri) / (2.0 * length))


def locus_lines(scene: Scene, m_squared: float) -> tuple[Line2, Line2, Line2]:
    return tuple(difference_line(scene, i, j, m_squared) for i, j in LOCUS_PAIRS)


def reflection_center(scene: Scene, m_squared: float,
                      tol: Optional[Tolerance] = None) -> tuple[Point2, tuple[Line2, Line2, Line2]]:
    tol = tol or scene.tolerance()
    if collinear(*scene.centers, tol=tol):
        raise ParallelLoci("centers are collinear, every locus line is parallel")
    lines = locus_lines(scene, m_squared)
    A = line_intersection(lines[0], lines[2], tol)
    return A, lines


def shrink_values(scene: Scene, A: Point2, m_squared: float) -> tuple[float, float, float]:
    """Per-circle R² = (R_i² - (1 - m²)|AO_i|²) / m²."""
    return tuple((c.radius ** 2 - (1.0 - m_squared) * A.dist(c.center) ** 2) / m_squared
                 for c in scene.circles)


def shrink_radius(scene: Scene, A: Point2, m_squared: float,
                  tol: Optional[Tolerance] = None) -> float:
    tol = tol or scene.tolerance()
    values = shrink_values(scene, A, m_squared)
    R2 = math.fsum(values) / 3.0
    R1 = scene.radii[0]
    if R2 <= tol.area:
        raise InfeasibleShrink(f"m²={m_squared}: R²={R2:.6g} is not positive")
    R = math.sqrt(R2)
    if R >= R1 - tol.abs:
        raise InfeasibleShrink(f"m²={m_squared}: R={R:.6g} is not below R1={R1:.6g}")
    return R


# --------------------------------------------------------------------------
# choosing m²

@dataclass(frozen=True)
class FeasibleChoice:
    m_squared: float
    reflection_center: Point2
    shrink_radius: float
    locus_lines: tuple[Line2, Line2, Line2]
    collinear: bool = False
    onset: Optional[float] = None  # smallest feasible m² below the chosen grid point
    diagnostics: tuple[dict, ...] = ()


def _check_outside(scene: Scene, A: Point2, R: float, m_squared: float, tol: Tolerance):
    for i, c in enumerate(scene.circles):
        for circle in (c, Circle(c.center, R)):
            if power_of_point(A, circle) <= tol.area:
                raise InfeasibleShrink(
                    f"m²={m_squared}: reflection center is not outside circle {i + 1}")


def _try_m2(scene: Scene, m_squared: float, tol: Tolerance) -> FeasibleChoice:
    A, lines = reflection_center(scene, m_squared, tol)
    R = shrink_radius(scene, A, m_squared, tol)
    _check_outside(scene, A, R, m_squared, tol)
    return FeasibleChoice(m_squared, A, R, lines)


def _collinear_choice(scene: Scene, tol: Tolerance) -> FeasibleChoice:
    """Reflection center for collinear centers.

    The three locus lines are then perpendicular to the common axis and
    coincide for exactly one m²; any point of that line has equal power
    ratios, so ``A`` is picked on it.
    """
    O1, O3 = scene.centers[0], scene.centers[2]
    u = (O3 - O1) * (1.0 / O1.dist(O3))
    n = u.perp()
    s = [u.dot(O - O1) for O in scene.centers]
    q = [r * r for r in scene.radii]
    if abs(s[1] - s[0]) <= tol.abs or abs(s[2] - s[1]) <= tol.abs:
        raise ParallelLoci("two centers project onto the same axis point")
    den = (q[2] - q[0]) / (s[2] - s[0]) - (q[1] - q[0]) / (s[1] - s[0])
    if abs(den) <= tol.eps_rel:
        raise ParallelLoci("collinear centers: locus lines are parallel and distinct for every m²")
    t = (s[2] - s[1]) / den
    if not t > 1.0:
        raise ParallelLoci(f"collinear centers: loci coincide only at 1/(1-m²)={t:.6g}, outside (0,1)")
    m_squared = 1.0 - 1.0 / t
    x = 0.5 * (s[0] + s[1]) - t * (q[1] - q[0]) / (2.0 * (s[1] - s[0]))
    foot = O1 + u * x
    lines = locus_lines(scene, m_squared)
    R2_axis = math.fsum(shrink_values(scene, foot, m_squared)) / 3.0
    R1 = scene.radii[0]
    if R2_axis <= tol.area:
        raise InfeasibleShrink(f"collinear m²={m_squared:.6g}: R²={R2_axis:.6g} is not positive")
    if R2_axis < (R1 - tol.abs) ** 2:
        A = foot
    else:
        # move off the axis, away from the tangent line, until R = R1/2
        target = 0.25 * R1 * R1
        A = foot - n * math.sqrt((R2_axis - target) * m_squared / (1.0 - m_squared))
    R = shrink_radius(scene, A, m_squared, tol)
    _check_outside(scene, A, R, m_squared, tol)
    return FeasibleChoice(m_squared, A, R, lines, collinear=True,
                          diagnostics=({"m_squared": m_squared, "status": "collinear"},))


def choose_feasible_m2(scene: Scene, requested: float = 0.75, tol: Optional[Tolerance] = None,
                       scan: bool = True) -> FeasibleChoice:
    """Pick m² so that 0 < R < R1 and A lies outside every C_i and uC_i.

    The requested value is tried first.  Otherwise the fixed grid
    0.05, 0.10, ..., 0.95 is scanned and the first feasible grid point is
    returned; the feasibility onset inside the preceding grid cell is
    bisected to ``BISECT_TOL`` and reported as ``onset``.
    """
    tol = tol or scene.tolerance()
    if not 0.0 < requested < 1.0:
        raise GeometryError(f"m² must lie in (0, 1), got {requested}")
    if collinear(*scene.centers, tol=tol):
        return _collinear_choice(scene, tol)

    diagnostics = []

    def attempt(m2):
        try:
            choice = _try_m2(scene, m2, tol)
        except ConstructionInfeasible as exc:
            diagnostics.append({"m_squared": m2, "status": type(exc).__name__, "detail": str(exc)})
            return None
        diagnostics.append({"m_squared": m2, "status": "ok"})
        return choice

    first = attempt(requested)
    if first is not None:
        return first
    if not scan:
        raise InfeasibleShrink(diagnostics[-1]["detail"], diagnostics)

    previous = None
    for m2 in M2_GRID:
        choice = attempt(m2)
        if choice is None:
            previous = m2
            continue
        onset = None
        if previous is not None:
            lo, hi = previous, m2
            while hi - lo > BISECT_TOL:
                mid = 0.5 * (lo + hi)
                try:
                    _try_m2(scene, mid, tol)
                    hi = mid
                except ConstructionInfeasible:
                    lo = mid
            onset = hi
        log.debug("m²=%s infeasible, using grid point %s", requested, m2)
        return FeasibleChoice(choice.m_squared, choice.reflection_center, choice.shrink_radius,
                              choice.locus_lines, onset=onset, diagnostics=tuple(diagnostics))
    raise NoFeasibleM2(f"no m² in the scan grid admits a valid equal-radius system", diagnostics)


# --------------------------------------------------------------------------
# tangent circle to the equal circles

def tangent_to_equal_circles(centers: Sequence[Point2], R: float, variant: str = "outer_tangent",
                             tol: Optional[Tolerance] = None) -> GeneralizedCircle:
    """Circle (or line, for collinear centers) touching three circles of radius R.

    For collinear centers the line lies on the left of the directed line
    from the first to the last center.
    """
    if variant not in VARIANTS:
        raise GeometryError(f"unknown tangent variant {variant!r}")
    tol = tol or Tolerance()
    p1, p2, p3 = centers
    if collinear(p1, p2, p3, tol):
        u = p3 - p1
        n = u.perp() * (1.0 / u.norm())
        return Line2(n, n.dot(p1) + R)
    O = circumcenter(p1, p2, p3, tol)
    d = math.fsum(O.dist(p) for p in centers) / 3.0
    if variant == "enclosing":
        return Circle(O, d + R)
    if d - R <= tol.abs:
        raise TangentRadiusNonpositive(f"circumradius {d:.6g} does not exceed R={R:.6g}")
    return Circle(O, d - R)


# --------------------------------------------------------------------------
# trace

TraceKind = Literal["point", "segment", "line", "circle", "label"]
Geometry = Union[Point2, Segment, Line2, Circle]


@dataclass(frozen=True)
class TraceStep:
    step_id: int
    kind: str
    label: str
    geometry: Geometry
    provenance: str
    refs: tuple[str, ...] = ()


@dataclass
class ConstructionTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def add(self, kind: str, label: str, geometry: Geometry, provenance: str,
            refs: Sequence[str] = ()) -> TraceStep:
        known = {s.label for s in self.steps}
        if label in known:
            raise ValueError(f"trace label {label!r} already defined")
        missing = [r for r in refs if r not in known]
        if missing:
            raise ValueError(f"trace step {label!r} uses undefined labels {missing}")
        step = TraceStep(len(self.steps) + 1, kind, label, geometry, provenance, tuple(refs))
        self.steps.append(step)
        return step

    def by_label(self, label: str) -> TraceStep:
        for s in self.steps:
            if s.label == label:
                return s
        raise KeyError(label)

    def provenances(self) -> list[str]:
        return sorted({s.provenance for s in self.steps})


def _kind_of(g: Geometry) -> str:
    return {Point2: "point", Segment: "segment", Line2: "line", Circle: "circle"}[type(g)]


def scene_trace(scene: Scene) -> ConstructionTrace:
    trace = ConstructionTrace()
    for i, c in enumerate(scene.circles, 1):
        trace.add("point", f"O_{i}", c.center, "3.1.1")
        trace.add("circle", f"C_{i}", c, "3.1.1", [f"O_{i}"])
    return trace


# --------------------------------------------------------------------------
# pipeline

@dataclass(frozen=True)
class PipelineConfig:
    m_squared: float = 0.75
    k_squared: Optional[float] = None  # None: squared largest center distance
    tangent_variant: str = "outer_tangent"
    eps_rel: float = 1e-9
    scan: bool = True

    def __post_init__(self):
        if not 0.0 < self.m_squared < 1.0:
            raise GeometryError(f"m² must lie in (0, 1), got {self.m_squared}")
        if self.k_squared is not None and not (math.isfinite(self.k_squared) and self.k_squared > 0):
            raise GeometryError(f"k² must be positive, got {self.k_squared}")
        if self.tangent_variant not in VARIANTS:
            raise GeometryError(f"unknown tangent variant {self.tangent_variant!r}")


@dataclass(frozen=True)
class ResidualReport:
    power_ratio_dev: float
    concurrency_dev: float
    c4_tangency: tuple[float, float, float]
    c4p_tangency: tuple[float, float, float]
    second_inversion_dev: tuple[float, float, float]
    final_tangency: tuple[float, float, float]
    final_tangency_pass: bool


@dataclass(frozen=True)
class PipelineResult:
    scene: Scene
    config: PipelineConfig
    m_squared: float
    reflection_center: Point2
    shrink_radius: float
    k2: float
    kp2: float
    locus_lines: tuple[Line2, Line2, Line2]
    equal_circles: tuple[Circle, Circle, Circle]
    c4: GeneralizedCircle
    inverted_equal: tuple[GeneralizedCircle, GeneralizedCircle, GeneralizedCircle]
    c4p: GeneralizedCircle
    second_images: tuple[GeneralizedCircle, GeneralizedCircle, GeneralizedCircle]
    c4pp: GeneralizedCircle
    collinear: bool
    circumcenter: Optional[Point2]
    onset: Optional[float]
    diagnostics: tuple[dict, ...]
    residuals: ResidualReport
    trace: ConstructionTrace = field(compare=False)

    @property
    def tolerance(self) -> Tolerance:
        return self.scene.tolerance(self.config.eps_rel)


def generalized_residual(g: GeneralizedCircle, c: Circle) -> float:
    if isinstance(g, Line2):
        return line_circle_residual(g, c)
    return tangency_classify(g, c).residual


def circle_deviation(a: GeneralizedCircle, b: GeneralizedCircle) -> float:
    """Center distance plus radius difference; infinite when a line is involved."""
    if isinstance(a, Circle) and isinstance(b, Circle):
        return a.center.dist(b.center) + abs(a.radius - b.radius)
    return math.inf


def _guard(A: Point2, g: GeneralizedCircle, name: str, tol: Tolerance):
    if isinstance(g, Circle):
        near = abs(power_of_point(A, g)) <= tol.area
    else:
        near = abs(g.signed_distance(A)) <= tol.abs
    if near:
        raise CenterOnObject(f"reflection center lies on {name}")


def default_k2(scene: Scene) -> float:
    O = scene.centers
    return max(O[i].dist(O[j]) for i, j in LOCUS_PAIRS) ** 2


def run_pipeline(scene: Scene, config: PipelineConfig = PipelineConfig()) -> PipelineResult:
    tol = scene.tolerance(config.eps_rel)
    choice = choose_feasible_m2(scene, config.m_squared, tol, scan=config.scan)
    m2, A, R = choice.m_squared, choice.reflection_center, choice.shrink_radius
    centers = scene.centers

    equal = tuple(Circle(O, R) for O in centers)
    c4 = tangent_to_equal_circles(centers, R, config.tangent_variant, tol)

    k2 = config.k_squared if config.k_squared is not None else default_k2(scene)
    kp2 = math.sqrt(m2) * k2
    first = InversionMap(A, k2)
    second = InversionMap(A, kp2)

    for i, c in enumerate(equal, 1):
        _guard(A, c, f"uC_{i}", tol)
    _guard(A, c4, "C_4", tol)
    for i, c in enumerate(scene.circles, 1):
        _guard(A, c, f"C_{i}", tol)

    inverted = tuple(invert_generalized(first, c, tol) for c in equal)
    c4p = invert_generalized(first, c4, tol)
    second_images = tuple(invert_generalized(second, c, tol) for c in scene.circles)
    c4pp = invert_generalized(second, c4p, tol)

    O2 = None if choice.collinear else c4.center
    trace = _build_trace(scene, choice, equal, c4, O2, config.tangent_variant,
                         first, second, inverted, c4p, second_images, c4pp)

    partial = dict(
        scene=scene, config=config, m_squared=m2, reflection_center=A, shrink_radius=R,
        k2=k2, kp2=kp2, locus_lines=choice.locus_lines, equal_circles=equal, c4=c4,
        inverted_equal=inverted, c4p=c4p, second_images=second_images, c4pp=c4pp,
        collinear=choice.collinear, circumcenter=O2, onset=choice.onset,
        diagnostics=choice.diagnostics, trace=trace,
    )
    residuals = _residuals(tol, **partial)
    return PipelineResult(residuals=residuals, **partial)


def _residuals(tol: Tolerance, *, scene: Scene, reflection_center, m_squared, kp2, locus_lines,
               equal_circles, c4, inverted_equal, c4p, c4pp, **_) -> ResidualReport:
    A = reflection_center
    ratio_dev = max(abs(power_of_point(A, C) / power_of_point(A, uC) - m_squared)
                    for C, uC in zip(scene.circles, equal_circles))
    concurrency = abs(locus_lines[1].signed_distance(A))
    c4_t = tuple(generalized_residual(c4, uC) for uC in equal_circles)
    c4p_t = tuple(generalized_residual(c4p, img) for img in inverted_equal)
    second = InversionMap(A, kp2)
    second_dev = tuple(circle_deviation(invert_generalized(second, C, tol), img)
                       for C, img in zip(scene.circles, inverted_equal))
    final = tuple(generalized_residual(c4pp, C) for C in scene.circles)
    return ResidualReport(ratio_dev, concurrency, c4_t, c4p_t, second_dev, final,
                          all(r <= tol.abs for r in final))


def residual_report(result: PipelineResult, scene: Optional[Scene] = None) -> ResidualReport:
    """Recompute every residual from the result's geometry."""
    scene = scene or result.scene
    fields = {k: getattr(result, k) for k in (
        "reflection_center", "m_squared", "kp2", "locus_lines", "equal_circles", "c4",
        "inverted_equal", "c4p", "c4pp")}
    return _residuals(scene.tolerance(result.config.eps_rel), scene=scene, **fields)


def _build_trace(scene, choice, equal, c4, O2, variant, first, second, inverted, c4p,
                 second_images, c4pp) -> ConstructionTrace:
    trace = scene_trace(scene)
    A = choice.reflection_center
    O = scene.centers
    R = choice.shrink_radius

    # shrunk circles and center segments
    for i, c in enumerate(equal, 1):
        trace.add("circle", f"uC_{i}", c, "4.1", [f"O_{i}", f"C_{i}"])
    segments = {}
    for i, j in LOCUS_PAIRS:
        name = f"O_{i + 1}O_{j + 1}"
        segments[(i, j)] = Segment(O[i], O[j])
        trace.add("segment", name, segments[(i, j)], "4.2", [f"O_{i + 1}", f"O_{j + 1}"])

    # equal-circle tangent: circumcenter route, or the line when centers are collinear
    if O2 is not None:
        for i, j in LOCUS_PAIRS:
            trace.add("line", f"bis_{i + 1}{j + 1}", perpendicular_bisector(O[i], O[j]), "4.3",
                      [f"O_{i + 1}O_{j + 1}"])
        trace.add("point", "O''", O2, "4.3", ["bis_12", "bis_23", "bis_13"])
        trace.add("segment", "O''O_3", Segment(O2, O[2]), "4.4", ["O''", "O_3"])
        toward = (O2 - O[2]) * (1.0 / O2.dist(O[2]))
        Z = O[2] + toward * (R if variant == "outer_tangent" else -R)
        trace.add("point", "Z", Z, "4.4", ["O''O_3", "uC_3"])
        trace.add("circle", "C_4", c4, "4.5", ["O''", "Z"])
    else:
        trace.add("line", "C_4", c4, "3.1.8", ["uC_1", "uC_2", "uC_3"])

    # midpoints, radical axes, locus lines and their feet, A
    midpoints = {}
    for k, (i, j) in enumerate(((0, 1), (1, 2), (0, 2)), 1):
        midpoints[(i, j)] = (O[i] + O[j]) * 0.5
        trace.add("point", f"M_{k}", midpoints[(i, j)], "4.6", [f"O_{i + 1}O_{j + 1}"])
    radical = {}
    for i, j in LOCUS_PAIRS:
        radical[(i, j)] = _radical_axis(scene.circles[i], scene.circles[j])
        trace.add("line", f"rad_{i + 1}{j + 1}", radical[(i, j)], "4.6",
                  [f"C_{i + 1}", f"C_{j + 1}"])
    if O2 is not None:
        Op = line_intersection(radical[(0, 1)], radical[(0, 2)])
        trace.add("point", "O'", Op, "4.6", ["rad_12", "rad_13"])
        axis23 = Line2.through(O[1], O[2])
        trace.add("point", "H'", foot_of_perpendicular(Op, axis23), "4.6", ["O'", "O_2O_3"])
    names = ("K_2-K_1", "K_3-K_2", "K_3-K_1")
    feet = ("H_2", "H_3", "H_1")
    for (i, j), name, foot, line in zip(LOCUS_PAIRS, names, feet, choice.locus_lines):
        axis = Line2.through(O[i], O[j])
        H = line_intersection(line, axis)
        trace.add("point", foot, H, "4.6", [f"O_{i + 1}O_{j + 1}"])
        trace.add("line", name, line, "4.6", [foot])
    trace.add("point", "A", A, "4.6", list(names))

    # annotation points where ray A->O_i meets uC_i and C_i
    letters = (("C", "D", "L", "M"), ("A", "B", "H", "I"), ("E", "f", "J", "K"))
    for i, (a, b, c, d) in enumerate(letters):
        u = (O[i] - A) * (1.0 / O[i].dist(A))
        for letter, radius, sign, ref in ((a, R, -1, "uC"), (b, R, 1, "uC"),
                                          (c, scene.radii[i], -1, "C"),
                                          (d, scene.radii[i], 1, "C")):
            trace.add("label", f"annot:{letter}", O[i] + u * (sign * radius), "3.2",
                      ["A", f"{ref}_{i + 1}"])

    # both inversions
    trace.add("circle", "k", first.circle, "4.7", ["A"])
    for i, img in enumerate(inverted, 1):
        trace.add(_kind_of(img), f"uC'_{i}", img, "4.7", [f"uC_{i}", "k"])
    trace.add(_kind_of(c4p), "C'_4", c4p, "4.7", ["C_4", "k"])
    trace.add("circle", "k'", second.circle, "4.9", ["A", "k"])
    for i, img in enumerate(second_images, 1):
        trace.add(_kind_of(img), f"C*_{i}", img, "4.8", [f"C_{i}", "k'"])
    trace.add(_kind_of(c4pp), "C''_4", c4pp, "4.10", ["C'_4", "k'"])
    return trace


def _radical_axis(c1: Circle, c2: Circle) -> Line2:
    d = c2.center - c1.center
    length = d.norm()
    n = d * (1.0 / length)
    mid = (c1.center + c2.center) * 0.5
    return Line2(n, n.dot(mid) - (c2.radius ** 2 - c1.radius ** 2) / (2.0 * length))
