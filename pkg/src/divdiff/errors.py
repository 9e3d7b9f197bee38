"""Exception types shared across the package."""


class DivdiffError(Exception):
    """Base class for errors raised by library operations."""


class ParseError(DivdiffError, ValueError):
    """Malformed rational literal, function description, or grid file."""


class DuplicateKnotError(DivdiffError):
    """A knot list contains the same abscissa twice."""

    def __init__(self, knot):
        self.knot = knot
        super().__init__(f"duplicate knot {knot}")


class PoleError(DivdiffError):
    """A rational function was evaluated where its denominator vanishes."""

    def __init__(self, point):
        self.point = point
        super().__init__(f"denominator vanishes at {point}")


class DomainEvaluationError(DivdiffError):
    """Evaluation outside the domain a function description supports."""
