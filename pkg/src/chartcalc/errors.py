"""Exception hierarchy shared by all chartcalc modules."""


class ChartError(Exception):
    """Base class for every error raised by chartcalc."""


class ChartSyntaxError(ChartError):
    """Malformed CHART/1 text.  Carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SemanticError(ChartError):
    """Well-formed CHART/1 text describing an inconsistent chart."""


class DanglingDart(ChartError):
    """Twin or rotation bookkeeping does not close up."""


class EulerViolation(ChartError):
    """The rotation system does not describe a sphere embedding."""


class LabelOutOfRange(ChartError):
    """Edge label outside [1, n-1]."""


class NotAWhiteVertex(ChartError):
    pass


class AxiomIIIViolated(ChartError):
    """The six arcs at a white vertex do not form the required local shape."""


class NotIncident(ChartError):
    pass


class NotALoop(ChartError):
    pass


class BoundaryLabelViolation(ChartError):
    """Region boundary carries labels outside the admissible band."""


class PatternMismatch(ChartError):
    """A move anchor does not locate the move's local configuration."""


class SideConditionViolated(ChartError):
    """The local configuration matches but a side condition fails."""


class AxiomRegression(ChartError):
    """Internal error: a rewrite produced an axiom-violating chart."""


class LabelConditionViolated(ChartError):
    pass


class BlockedPath(ChartError):
    pass


class PreconditionViolated(ChartError):
    pass


class InteriorNotEmpty(ChartError):
    pass


class LayoutFailure(ChartError):
    """Planar layout could not be computed; caller may fall back."""


class BudgetTooLarge(ChartError):
    """Enumeration budget exceeds the configured state-space cap."""
