"""Orientations of a multigraph: degree vectors, score machinery, fibers.

An orientation assigns one direction per edge. For a stored edge (u, v)
with u <= v, direction bit 0 means the arc u -> v and bit 1 means v -> u.
A loop admits exactly one orientation, the arc (v, v), so its bit is pinned
to 0 and loops never count toward the 2^(non-loop edges) total. A loop arc
adds 1 to both the indegree and the outdegree of its vertex (keeping
outdegree + indegree = degree, with loops counting twice) and therefore 0
to its score.

The distinct-vector counters enumerate all orientations through the subset
sum kernels: each vector is an affine function of the direction bits, so
the image over all bit patterns is a distinct-subset-sums question.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    BadTailLength,
    InvalidVertex,
    NoDirectedPath,
    SameVertex,
    SizeMismatch,
)
from .limits import DEFAULT_ENUMERATION_CAP, check_cap
from .multigraph import EdgeSubset, IntVector, Multigraph


@dataclass(frozen=True)
class Orientation:
    graph: Multigraph
    bits: int

    def __post_init__(self):
        m = self.graph.edge_count
        if self.bits < 0 or self.bits >> m:
            raise SizeMismatch(f"orientation bits {self.bits:#x} do not fit {m} edges")
        if self.bits & _loop_mask(self.graph):
            raise SizeMismatch("a loop has exactly one orientation; its bit must be 0")

    def arc(self, e: int) -> tuple[int, int]:
        """(tail, head) of edge e under this orientation."""
        self.graph._check_edge(e)
        u, v = self.graph.edges[e]
        return (v, u) if (self.bits >> e) & 1 else (u, v)

    def outdegree_vector(self) -> IntVector:
        out = [0] * self.graph.num_vertices
        for e in range(self.graph.edge_count):
            out[self.arc(e)[0]] += 1
        return tuple(out)

    def indegree_vector(self) -> IntVector:
        inc = [0] * self.graph.num_vertices
        for e in range(self.graph.edge_count):
            inc[self.arc(e)[1]] += 1
        return tuple(inc)

    def score_vector(self) -> IntVector:
        """outdegree - indegree per vertex; loops contribute 0."""
        s = [0] * self.graph.num_vertices
        for e in range(self.graph.edge_count):
            tail, head = self.arc(e)
            s[tail] += 1
            s[head] -= 1
        return tuple(s)

    def out_adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex outgoing (head, edge id) lists in edge order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.graph.num_vertices)]
        for e in range(self.graph.edge_count):
            tail, head = self.arc(e)
            adj[tail].append((head, e))
        return adj

    def reachable_set(self, source: int) -> frozenset[int]:
        """Vertices reachable from source along arcs (source included)."""
        _check_vertex(self.graph, source)
        adj = self.out_adjacency()
        seen = {source}
        queue = [source]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for y, _ in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def reverse_directed_path(self, source: int, target: int) -> Orientation:
        """Reverse one shortest directed path from source to target.

        The path is deterministic: BFS layer by layer, each vertex keeping
        the lowest-index predecessor (then lowest edge id). The returned
        orientation has outdegree(source) down by one, outdegree(target) up
        by one, and every other outdegree unchanged.
        """
        _check_vertex(self.graph, source)
        _check_vertex(self.graph, target)
        if source == target:
            raise SameVertex(f"path reversal needs two distinct vertices, got {source}")
        adj = self.out_adjacency()
        n = self.graph.num_vertices
        parent_edge = [-1] * n
        parent_vertex = [-1] * n
        seen = [False] * n
        seen[source] = True
        layer = [source]
        while layer and not seen[target]:
            nxt = []
            for x in sorted(layer):
                for y, e in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        parent_vertex[y] = x
                        parent_edge[y] = e
                        nxt.append(y)
            layer = nxt
        if not seen[target]:
            raise NoDirectedPath(f"no directed path from {source} to {target}")
        flips = 0
        x = target
        while x != source:
            flips |= 1 << parent_edge[x]
            x = parent_vertex[x]
        return Orientation(self.graph, self.bits ^ flips)

    def flip_set(self, subset: EdgeSubset) -> Orientation:
        """Reverse exactly the non-loop edges in ``subset``; loops stay put."""
        self.graph._check_subset(subset)
        toggles = subset & ~_loop_mask(self.graph)
        return Orientation(self.graph, self.bits ^ toggles)

    def subdigraph_score_vectors(
        self, cap: int = DEFAULT_ENUMERATION_CAP
    ) -> frozenset[IntVector]:
        """Score vectors of all 2^|E| spanning subdigraphs (arc subsets).

        A loop arc scores 0, so only non-loop arcs are enumerated; the
        resulting set is unchanged.
        """
        g = self.graph
        check_cap(g.edge_count, cap, "subdigraph score vectors")
        n = g.num_vertices
        deg = g.degrees()
        deltas = []
        for e in range(g.edge_count):
            tail, head = self.arc(e)
            if tail != head:
                d = [0] * n
                d[tail] += 1
                d[head] -= 1
                deltas.append(d)
        vecs = kernels.distinct_subset_sums(
            [0] * n, deltas, [-d for d in deg], list(deg)
        )
        return frozenset(map(tuple, vecs.tolist()))

    def to_bit_string(self) -> str:
        """One '0'/'1' per edge, edge order of the owning graph."""
        return "".join(
            str((self.bits >> e) & 1) for e in range(self.graph.edge_count)
        )

    @classmethod
    def from_bit_string(cls, graph: Multigraph, s: str) -> Orientation:
        if len(s) != graph.edge_count or set(s) - {"0", "1"}:
            raise SizeMismatch(
                f"bit string {s!r} does not fit a graph with {graph.edge_count} edges"
            )
        bits = 0
        for e, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << e
        return cls(graph, bits)


def _check_vertex(g: Multigraph, v: int) -> None:
    if not (0 <= v < g.num_vertices):
        raise InvalidVertex(f"vertex {v} out of range 0..{g.num_vertices - 1}")


def _loop_mask(g: Multigraph) -> int:
    mask = 0
    for e, (u, v) in enumerate(g.edges):
        if u == v:
            mask |= 1 << e
    return mask


def _nonloop_edges(g: Multigraph) -> list[int]:
    return [e for e, (u, v) in enumerate(g.edges) if u != v]


def enumerate_orientations(g: Multigraph, cap: int = DEFAULT_ENUMERATION_CAP):
    """Yield all 2^(non-loop edges) orientations in lexicographic bit order."""
    positions = _nonloop_edges(g)
    check_cap(len(positions), cap, "orientation enumeration")
    for pattern in range(1 << len(positions)):
        bits = 0
        for j, e in enumerate(positions):
            if (pattern >> j) & 1:
                bits |= 1 << e
        yield Orientation(g, bits)


def l_to_r_orientation(g: Multigraph, bipartition: tuple[IntVector, IntVector]) -> Orientation:
    """The orientation sending every edge from the L side to the R side."""
    left = set(bipartition[0])
    bits = 0
    for e, (u, v) in enumerate(g.edges):
        if u not in left:
            bits |= 1 << e
    return Orientation(g, bits)


# -- distinct-vector counting over all orientations -------------------------


def _count_vectors(g: Multigraph, cap: int, base, delta_at, lower, upper) -> int:
    positions = _nonloop_edges(g)
    check_cap(len(positions), cap, "orientation vector counting")
    deltas = [delta_at(*g.edges[e]) for e in positions]
    return kernels.count_distinct_subset_sums(base, deltas, lower, upper)


def _unit_pair(n: int, at_plus: int, at_minus: int, amount: int) -> list[int]:
    d = [0] * n
    d[at_plus] += amount
    d[at_minus] -= amount
    return d


def count_distinct_outdeg(g: Multigraph, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Number of distinct outdegree vectors over all orientations."""
    n = g.num_vertices
    deg = g.degrees()
    base = [0] * n
    for u, v in g.edges:
        base[u] += 1  # bit 0 tail is u; a loop always exits its own vertex
    return _count_vectors(
        g, cap, base, lambda u, v: _unit_pair(n, v, u, 1), [0] * n, list(deg)
    )


def count_distinct_indeg(g: Multigraph, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Number of distinct indegree vectors over all orientations."""
    n = g.num_vertices
    deg = g.degrees()
    base = [0] * n
    for u, v in g.edges:
        base[v] += 1  # bit 0 head is v; a loop is its own head
    return _count_vectors(
        g, cap, base, lambda u, v: _unit_pair(n, u, v, 1), [0] * n, list(deg)
    )


def count_distinct_score(g: Multigraph, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Number of distinct score vectors over all orientations."""
    n = g.num_vertices
    deg = g.degrees()
    base = [0] * n
    for u, v in g.edges:
        if u != v:
            base[u] += 1
            base[v] -= 1
    return _count_vectors(
        g, cap, base, lambda u, v: _unit_pair(n, v, u, 2), [-d for d in deg], list(deg)
    )


# -- outdegree fibers over a fixed tail -------------------------------------


@dataclass(frozen=True)
class FiberReport:
    """Outdegree vectors agreeing with a fixed tail, seen as (first, second) pairs.

    ``pairs`` is sorted by descending first coordinate, so an "interval"
    verdict means pairs == ((o1, o2), (o1 - 1, o2 + 1), ..., (o1 - k, o2 + k)).
    The verdict "gapped" is impossible for correct code and exists only so
    the checker cannot paper over a broken fiber.
    """

    vertex_pair: tuple[int, int]
    tail: IntVector
    pairs: tuple[tuple[int, int], ...]
    verdict: str


def fiber_interval_check(
    g: Multigraph,
    v_a: int,
    v_b: int,
    tail: IntVector,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> FiberReport:
    """Check that the outdegree fiber over ``tail`` is an antidiagonal interval.

    Coordinates are reported with v_a in slot one and v_b in slot two; the
    remaining vertices keep their index order and must match ``tail``.
    """
    _check_vertex(g, v_a)
    _check_vertex(g, v_b)
    if v_a == v_b:
        raise SameVertex(f"fiber check needs two distinct vertices, got {v_a}")
    n = g.num_vertices
    tail = tuple(tail)
    if len(tail) != n - 2:
        raise BadTailLength(f"tail has length {len(tail)}, expected {n - 2}")

    positions = _nonloop_edges(g)
    check_cap(len(positions), cap, "outdegree fiber enumeration")
    deg = g.degrees()
    base = [0] * n
    for u, v in g.edges:
        base[u] += 1
    deltas = [_unit_pair(n, v, u, 1) for u, v in (g.edges[e] for e in positions)]
    vecs = kernels.distinct_subset_sums(base, deltas, [0] * n, list(deg))

    others = [w for w in range(n) if w != v_a and w != v_b]
    if others:
        mask = (vecs[:, others] == np.asarray(tail, dtype=np.int64)).all(axis=1)
    else:
        mask = np.ones(len(vecs), dtype=bool)
    pair_rows = vecs[mask][:, [v_a, v_b]]
    pairs = sorted({(int(a), int(b)) for a, b in pair_rows.tolist()}, reverse=True)

    if not pairs:
        verdict = "empty"
    else:
        firsts = [p[0] for p in pairs]
        sums = {a + b for a, b in pairs}
        contiguous = firsts == list(range(firsts[0], firsts[0] - len(firsts), -1))
        verdict = "interval" if len(sums) == 1 and contiguous else "gapped"
    return FiberReport((v_a, v_b), tail, tuple(pairs), verdict)
