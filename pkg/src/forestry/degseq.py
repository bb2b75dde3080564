"""Degree sequences of spanning subgraphs, and the signed bipartite map.

Degree sequences are ordered tuples under the fixed vertex labeling; two
subgraphs with the same multiset but different per-vertex degrees count as
different sequences, and distinct subgraphs frequently share one sequence.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import BadBipartition
from .limits import DEFAULT_ENUMERATION_CAP, check_cap
from .multigraph import IntVector, Multigraph


@dataclass(frozen=True)
class DegSeqSet:
    """The distinct degree sequences realized by a graph's spanning subgraphs."""

    num_vertices: int
    vectors: frozenset[IntVector]

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __contains__(self, vec) -> bool:
        return tuple(vec) in self.vectors

    def to_json_obj(self) -> list[list[int]]:
        return [list(v) for v in sorted(self.vectors)]


def enumerate_degree_sequences(
    g: Multigraph, cap: int = DEFAULT_ENUMERATION_CAP
) -> DegSeqSet:
    """The set { degree_sequence(g, A) : A subseteq E } of ordered tuples.

    Each edge adds 1 to both endpoint degrees (2 to one vertex for a loop),
    so the sequence is an affine function of the subset bits and the
    enumeration is a distinct-subset-sums kernel call.
    """
    check_cap(g.edge_count, cap, "degree sequence enumeration")
    n = g.num_vertices
    deltas = []
    for u, v in g.edges:
        d = [0] * n
        d[u] += 1
        d[v] += 1
        deltas.append(d)
    vecs = kernels.distinct_subset_sums([0] * n, deltas, [0] * n, list(g.degrees()))
    return DegSeqSet(n, frozenset(map(tuple, vecs.tolist())))


def count_degree_sequences(g: Multigraph, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Cardinality of enumerate_degree_sequences(g), without decoding vectors."""
    check_cap(g.edge_count, cap, "degree sequence counting")
    n = g.num_vertices
    deltas = []
    for u, v in g.edges:
        d = [0] * n
        d[u] += 1
        d[v] += 1
        deltas.append(d)
    return kernels.count_distinct_subset_sums(
        [0] * n, deltas, [0] * n, list(g.degrees())
    )


def phi(degseq: IntVector, bipartition: tuple[IntVector, IntVector]) -> IntVector:
    """Negate the entries on the R side of a bipartition, keep the L side.

    For a bipartite graph oriented entirely from L to R, this sends the
    degree sequence of a spanning subgraph to the score vector of the
    corresponding spanning subdigraph, bijectively.
    """
    left, right = bipartition
    n = len(degseq)
    seen = sorted(tuple(left) + tuple(right))
    if seen != list(range(n)):
        raise BadBipartition(
            f"(L, R) must partition 0..{n - 1}, got L={tuple(left)} R={tuple(right)}"
        )
    right_set = set(right)
    return tuple(-x if i in right_set else x for i, x in enumerate(degseq))
