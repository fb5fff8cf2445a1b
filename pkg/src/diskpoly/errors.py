"""Exception hierarchy for the diskpoly package."""


class DiskPolygonError(Exception):
    """Base class for all diskpoly errors."""


class EmptyInput(DiskPolygonError):
    """An operation received an empty point or center list."""


class DegenerateIntersection(DiskPolygonError):
    """The disk intersection has empty interior or an inconsistent boundary."""


class CenterParameterOutOfRange(DiskPolygonError):
    """Some pair of generating centers is at distance >= sqrt(3)."""


class NoVertices(DiskPolygonError):
    """The dual of a single disk is undefined: there are no vertices to build from."""


class DiameterTooLarge(DiskPolygonError):
    """Spindle hull input has diameter >= sqrt(3)."""


class DOutOfRange(DiskPolygonError):
    """Center parameter d outside the domain of a closed-form function or check."""


class AlphaOutOfRange(DiskPolygonError):
    """Half-apex angle outside [0, pi/6]."""


class XOutOfInterval(DiskPolygonError):
    """Incircle radius x outside the admissible interval for the area bound."""


class ReachOutOfRange(DiskPolygonError):
    """Cap apex distance must satisfy x < reach <= 2 - x."""


class NumericalDomainViolation(DiskPolygonError):
    """An inverse-trig argument left [-1, 1] by more than the clamping slack."""


class CrossCheckError(DiskPolygonError):
    """Two independent computation routes disagree beyond tolerance."""


class BadInput(DiskPolygonError):
    """Malformed CLI flags or input files."""
