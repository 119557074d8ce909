"""Exception types shared across the package.

Everything derives from BergesatError (a ValueError) so callers can catch
broadly; the CLI maps these onto its exit codes.
"""

__all__ = [
    "BergesatError",
    "BadArity",
    "BadLength",
    "BadParity",
    "DuplicateEdge",
    "EqualVertices",
    "InvalidSpec",
    "ParseError",
    "TooLarge",
    "UnsupportedParameters",
    "VertexOutOfRange",
]


class BergesatError(ValueError):
    """Base class for all package-specific errors."""


class BadArity(BergesatError):
    """An edge does not consist of exactly k distinct vertices."""


class DuplicateEdge(BergesatError):
    """The same k-set appears twice in an edge list."""


class VertexOutOfRange(BergesatError):
    """A vertex label falls outside 0..n-1."""


class EqualVertices(BergesatError):
    """A vertex pair (u, v) with u == v where distinct vertices are required."""


class UnsupportedParameters(BergesatError):
    """Operation only defined for specific (k, ell); called outside that window."""


class InvalidSpec(BergesatError):
    """Structurally invalid search parameters."""


class TooLarge(BergesatError):
    """Instance exceeds a hard size cap or an internal search budget."""


class BadParity(BergesatError):
    """Construction order has the wrong parity."""


class BadLength(BergesatError):
    """Cycle length incompatible with the uniformity."""


class ParseError(BergesatError):
    """A text line is not in the normalized exchange format."""

    def __init__(self, message: str, lineno: int | None = None):
        super().__init__(message)
        self.lineno = lineno
