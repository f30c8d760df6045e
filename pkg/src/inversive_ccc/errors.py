"""Exception hierarchy.

The three top-level families map onto CLI exit codes: ``DegenerateInput``
(4), ``ConstructionInfeasible`` (3) and plain ``GeometryError`` for
primitive-level failures.
"""


class GeometryError(ValueError):
    pass


class ImaginaryCircle(GeometryError):
    pass


class CoincidentPoints(GeometryError):
    pass


class CollinearPoints(GeometryError):
    pass


class ParallelLines(GeometryError):
    pass


class CenterHasNoImage(GeometryError):
    """The center of an inversion has no image in the finite plane."""


class DimensionMismatch(GeometryError):
    pass


class DegenerateInput(GeometryError):
    """Scene rejected before any construction is attempted."""


class ConcentricInput(DegenerateInput):
    pass


class NestedInput(DegenerateInput):
    pass


class DuplicateCircle(DegenerateInput):
    pass


class ConstructionInfeasible(GeometryError):
    """The inversive construction cannot be carried out for this scene."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = list(diagnostics or [])


class InfeasibleShrink(ConstructionInfeasible):
    pass


class NoFeasibleM2(ConstructionInfeasible):
    pass


class TangentRadiusNonpositive(ConstructionInfeasible):
    pass


class ParallelLoci(ConstructionInfeasible):
    pass


class CenterOnObject(ConstructionInfeasible):
    pass


class DegenerateLinearSystem(GeometryError):
    pass


class EmptySolutionSet(GeometryError):
    pass
