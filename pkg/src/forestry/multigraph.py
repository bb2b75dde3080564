"""Labeled undirected multigraphs with loops and parallel edges.

Vertices are the indices 0..n-1 in code; all text I/O (edge-list files, CLI
output) is 1-based. An edge is stored as a normalized pair (u, v) with
u <= v, where u == v is a loop; the position of an edge in ``edges`` is its
stable edge id. An edge subset is a plain int bitmask over those positions.
A loop counts twice in every degree it touches.

Multigraph values are immutable; every operation returns a new graph, so
they are safe to share across threads without synchronization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EdgeListParseError,
    InvalidEdgeId,
    LoopContraction,
    SizeMismatch,
)

# An ordered per-vertex tuple: degree sequences, indegree/outdegree/score
# vectors and the like. Position i belongs to vertex i.
IntVector = tuple[int, ...]

# Bitmask over edge ids of one specific graph.
EdgeSubset = int


@dataclass(frozen=True)
class Multigraph:
    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.num_vertices < 0:
            raise ValueError("num_vertices must be nonnegative")
        normalized = []
        for u, v in self.edges:
            if u > v:
                u, v = v, u
            if not (0 <= u and v < self.num_vertices):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.num_vertices - 1}")
            normalized.append((u, v))
        object.__setattr__(self, "edges", tuple(normalized))

    # -- basic queries ---------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_edge_subset(self) -> EdgeSubset:
        return (1 << len(self.edges)) - 1

    def _check_edge(self, e: int) -> None:
        if not (0 <= e < len(self.edges)):
            raise InvalidEdgeId(f"edge id {e} out of range 0..{len(self.edges) - 1}")

    def _check_subset(self, subset: EdgeSubset) -> None:
        if subset < 0 or subset >> len(self.edges):
            raise SizeMismatch(
                f"subset {subset:#x} does not fit a graph with {len(self.edges)} edges"
            )

    def is_loop(self, e: int) -> bool:
        self._check_edge(e)
        u, v = self.edges[e]
        return u == v

    def degrees(self) -> IntVector:
        """Full-graph degree of every vertex; loops count twice."""
        return self.degree_sequence(self.full_edge_subset)

    def degree_sequence(self, subset: EdgeSubset) -> IntVector:
        """Degrees of the spanning subgraph keeping exactly the edges in ``subset``."""
        self._check_subset(subset)
        deg = [0] * self.num_vertices
        for e, (u, v) in enumerate(self.edges):
            if (subset >> e) & 1:
                deg[u] += 1
                deg[v] += 1
        return tuple(deg)

    def components_count(self, subset: EdgeSubset) -> int:
        """Number of connected components of (V, subset), isolated vertices included."""
        self._check_subset(subset)
        parent = list(range(self.num_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = self.num_vertices
        for e, (u, v) in enumerate(self.edges):
            if (subset >> e) & 1:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[rv] = ru
                    count -= 1
        return count

    def is_bridge(self, e: int) -> bool:
        """True iff the endpoints of ``e`` fall into different components of G - e."""
        self._check_edge(e)
        u, v = self.edges[e]
        if u == v:
            return False
        rest = self.full_edge_subset & ~(1 << e)
        # one union-find pass over the remaining edges
        parent = list(range(self.num_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, (a, b) in enumerate(self.edges):
            if (rest >> i) & 1:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[rb] = ra
        return find(u) != find(v)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (neighbor, edge id), both directions, in edge order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.num_vertices)]
        for e, (u, v) in enumerate(self.edges):
            adj[u].append((v, e))
            if u != v:
                adj[v].append((u, e))
        return adj

    def is_bipartite(self) -> tuple[IntVector, IntVector] | None:
        """A 2-coloring (L, R) with every edge crossing, or None.

        BFS 2-coloring per component, lowest unvisited vertex first; isolated
        vertices land in L. Any loop makes the graph non-bipartite.
        """
        color = [-1] * self.num_vertices
        adj = self.adjacency()
        for start in range(self.num_vertices):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = [start]
            head = 0
            while head < len(queue):
                x = queue[head]
                head += 1
                for y, _ in adj[x]:
                    if color[y] == -1:
                        color[y] = 1 - color[x]
                        queue.append(y)
                    elif color[y] == color[x]:
                        return None
        left = tuple(i for i in range(self.num_vertices) if color[i] == 0)
        right = tuple(i for i in range(self.num_vertices) if color[i] == 1)
        return left, right

    # -- deletion / contraction -------------------------------------------

    def delete_edge(self, e: int) -> Multigraph:
        """G - e: same vertices, edge ids above ``e`` shift down by one."""
        self._check_edge(e)
        return Multigraph(self.num_vertices, self.edges[:e] + self.edges[e + 1:])

    def contract_edge(self, e: int) -> Multigraph:
        """G / e: merge the endpoints of a non-loop edge ``e``.

        The merged vertex takes the index min(u, v); indices above max(u, v)
        shift down by one. Parallel copies of the contracted edge become
        loops on the merged vertex. Contracting a loop is rejected.
        """
        self._check_edge(e)
        u, v = self.edges[e]
        if u == v:
            raise LoopContraction(f"edge {e} is a loop on vertex {u}")

        def remap(x: int) -> int:
            if x == v:
                return u
            return x - 1 if x > v else x

        new_edges = tuple(
            (remap(a), remap(b))
            for i, (a, b) in enumerate(self.edges)
            if i != e
        )
        return Multigraph(self.num_vertices - 1, new_edges)

    # -- edge-list text format ---------------------------------------------

    def to_edge_list(self) -> str:
        """Serialize: line 1 is "n m", then one 1-based "u v" line per edge."""
        lines = [f"{self.num_vertices} {len(self.edges)}"]
        lines.extend(f"{u + 1} {v + 1}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Multigraph:
    """Parse the edge-list text format (exact inverse of ``to_edge_list``).

    Line 1 is "n m"; then m lines "u v" with 1-based endpoints, u == v for a
    loop and repeated lines for parallel edges. Lines starting with '#' are
    comments; blank lines are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise EdgeListParseError("empty input: expected a header line 'n m'")

    def two_ints(lineno: int, line: str) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: expected two integers, got {line!r}") from None

    header_lineno, header = rows[0]
    n, m = two_ints(header_lineno, header)
    if n < 0 or m < 0:
        raise EdgeListParseError(f"line {header_lineno}: negative counts in header")
    if len(rows) - 1 != m:
        raise EdgeListParseError(f"header promises {m} edges, found {len(rows) - 1} edge lines")
    edges = []
    for lineno, line in rows[1:]:
        u, v = two_ints(lineno, line)
        if not (1 <= u <= n and 1 <= v <= n):
            raise EdgeListParseError(f"line {lineno}: endpoint outside 1..{n}")
        edges.append((u - 1, v - 1))
    return Multigraph(n, tuple(edges))
