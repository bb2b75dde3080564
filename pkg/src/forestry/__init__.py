"""forestry: exact multigraph invariants around forests and orientations.

The package computes, for labeled undirected multigraphs with loops and
parallel edges:

* the Tutte polynomial, by subset expansion and by deletion-contraction;
* forest counts, brute-force and via a memoized T(2,1) recursion;
* distinct indegree / outdegree / score vectors over all orientations,
  and score vectors of spanning subdigraphs;
* distinct degree sequences of spanning subgraphs;
* verification verdicts tying those counts together (equality on bipartite
  graphs, strict inequality checks elsewhere).

Hot enumeration loops run on a numba JIT backend with a pure-numpy
fallback; see ``forestry.kernels``.
"""

from .degseq import DegSeqSet, count_degree_sequences, enumerate_degree_sequences, phi
from .errors import (
    BadBipartition,
    BadTailLength,
    ChainBroken,
    EdgeListParseError,
    EnumerationCapExceeded,
    ForestryError,
    InvalidEdgeId,
    InvalidParameter,
    InvalidVertex,
    LoopContraction,
    NoDirectedPath,
    NotBipartite,
    SameVertex,
    SelfCheckFailed,
    SizeMismatch,
)
from .generators import (
    book,
    complete,
    complete_bipartite,
    cycle,
    from_spec,
    path,
    random_bipartite,
    random_cactus,
    random_multigraph,
)
from .limits import DEFAULT_ENUMERATION_CAP
from .multigraph import EdgeSubset, IntVector, Multigraph, parse_edge_list
from .orientations import (
    FiberReport,
    Orientation,
    count_distinct_indeg,
    count_distinct_outdeg,
    count_distinct_score,
    enumerate_orientations,
    fiber_interval_check,
    l_to_r_orientation,
)
from .rng import SplitMix64
from .tutte import (
    TuttePolynomial,
    count_forests_brute,
    t21,
    tutte_deletion_contraction,
    tutte_subset_expansion,
)
from .verify import (
    ChainReport,
    VerifyReport,
    compare_counts,
    sweep,
    verify_bipartite_equality,
    verify_equivalence_chain,
)

__version__ = "0.1.0"
