"""Exception hierarchy shared by all polycover modules."""


class PolycoverError(Exception):
    """Base class for every structured error raised by this package."""


# geometry ------------------------------------------------------------------

class NonFinite(PolycoverError):
    """A coordinate is NaN or infinite."""


class TooFewVertices(PolycoverError):
    """Polygon has fewer than three vertices."""


class SelfIntersecting(PolycoverError):
    """Polygon edges cross, overlap, or collapse."""


class DegenerateArea(PolycoverError):
    """Polygon area is below the 1e-12 floor."""


# sampling ------------------------------------------------------------------

class InvalidDensity(PolycoverError):
    """Sampling density must be strictly positive."""


# clustering ----------------------------------------------------------------

class EmptyInput(PolycoverError):
    """An operation received an empty point set or skeleton."""


class ZeroK(PolycoverError):
    """k must be at least 1."""


class IndexMismatch(PolycoverError):
    """A clustering result does not fit the point set it is applied to."""


# coverage ------------------------------------------------------------------

class KindMismatch(PolycoverError):
    """Footprints of mixed kinds in one solution."""


class CoverageFailure(PolycoverError):
    """A solver produced a solution that fails its own verification."""


# oracle --------------------------------------------------------------------

class TooLarge(PolycoverError):
    """Instance exceeds the brute-force guardrails (n <= 25, k <= 3, grid <= 40/axis)."""


# gadget --------------------------------------------------------------------

class BadLength(PolycoverError):
    """Link endpoints do not match the declared (2m+1) * segment_len span."""


class BadM(PolycoverError):
    """Link half-length m must be an integer greater than 3."""


class BadAngles(PolycoverError):
    """Junction arm directions are not pairwise 120 degrees."""


class NotCubic(PolycoverError):
    """Layout graph has a vertex of degree != 3."""


class BadRoute(PolycoverError):
    """Route legs do not decompose into an odd number (2m+1, m > 3) of segments."""


# hardness ------------------------------------------------------------------

class NoRootInBracket(PolycoverError):
    """Residual has no sign change over the search bracket."""


class AmbiguousRoot(PolycoverError):
    """Multiple residual roots and none can be selected consistently."""


# io ------------------------------------------------------------------------

class ParseError(PolycoverError):
    """Malformed document; carries a location where available."""


class ValidationError(PolycoverError):
    """Well-formed document with invalid content."""


class IoError(PolycoverError):
    """Underlying file operation failed."""


class EmptyScene(PolycoverError):
    """Nothing to render."""
