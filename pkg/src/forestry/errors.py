"""Exception taxonomy.

The CLI maps these onto exit codes: usage and input problems exit 2,
enumeration-cap overruns exit 3, and self-check failures (a proven identity
coming out false, which means a bug, not a property of the input) exit 1.
"""


class ForestryError(Exception):
    """Base class for all package-specific errors."""


class InvalidEdgeId(ForestryError):
    """Edge index outside 0..m-1 for the graph at hand."""


class LoopContraction(ForestryError):
    """Contraction of a loop was requested; loops can only be deleted."""


class SizeMismatch(ForestryError):
    """A bitmask does not fit the edge count of its graph."""


class InvalidVertex(ForestryError):
    """Vertex index outside 0..n-1."""


class InvalidParameter(ForestryError):
    """Generator or harness parameter out of range."""


class EdgeListParseError(ForestryError):
    """Malformed edge-list text."""


class EnumerationCapExceeded(ForestryError):
    """An exhaustive 2^m enumeration was asked to exceed its configured cap."""


class NoDirectedPath(ForestryError):
    """reverse_directed_path: the target is not reachable from the source."""


class SameVertex(ForestryError):
    """An operation needs two distinct vertices."""


class BadTailLength(ForestryError):
    """Fiber check: the fixed tail must have length n - 2."""


class BadBipartition(ForestryError):
    """The given (L, R) pair is not a partition of the vertex set."""


class NotBipartite(ForestryError):
    """A bipartite-only operation was called on a non-bipartite graph."""


class SelfCheckFailed(ForestryError):
    """Two provably-equal quantities disagreed; indicates an implementation bug."""


class ChainBroken(SelfCheckFailed):
    """The orientation-count equivalence chain produced unequal values."""
