"""Independent reference implementations used only to check the library.

Nothing here shares code with the package internals: cycle detection is a
DFS (the library characterizes forests through union-find component
counts), spanning trees come from an integer matrix-tree determinant, and
the vector enumerations below iterate bit patterns directly over the edge
list.
"""

from forestry import Multigraph


def is_acyclic_dfs(g: Multigraph, subset: int) -> bool:
    """DFS cycle detection on the spanning subgraph (V, subset)."""
    n = g.num_vertices
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(g.edges):
        if (subset >> e) & 1:
            if u == v:
                return False  # a loop is a cycle
            adj[u].append((v, e))
            adj[v].append((u, e))
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [(root, -1)]
        while stack:
            x, in_edge = stack.pop()
            for y, e in adj[x]:
                if e == in_edge:
                    continue
                if seen[y]:
                    return False
                seen[y] = True
                stack.append((y, e))
    return True


def forest_count_dfs(g: Multigraph) -> int:
    return sum(1 for a in range(1 << g.edge_count) if is_acyclic_dfs(g, a))


def _bareiss_det(mat: list[list[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def spanning_tree_count_matrix_tree(g: Multigraph) -> int:
    """Number of spanning trees via the reduced Laplacian; loops ignored."""
    n = g.num_vertices
    if n <= 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        if u != v:
            lap[u][u] += 1
            lap[v][v] += 1
            lap[u][v] -= 1
            lap[v][u] -= 1
    reduced = [row[1:] for row in lap[1:]]
    return _bareiss_det(reduced)


def degree_sequences_py(g: Multigraph) -> set[tuple[int, ...]]:
    out = set()
    for a in range(1 << g.edge_count):
        deg = [0] * g.num_vertices
        for e, (u, v) in enumerate(g.edges):
            if (a >> e) & 1:
                deg[u] += 1
                deg[v] += 1
        out.add(tuple(deg))
    return out


def orientation_vector_sets_py(g: Multigraph):
    """(outdegree, indegree, score) tuple sets over all orientations."""
    nonloop = [e for e, (u, v) in enumerate(g.edges) if u != v]
    outs, ins, scores = set(), set(), set()
    for pattern in range(1 << len(nonloop)):
        out = [0] * g.num_vertices
        inc = [0] * g.num_vertices
        flipped = {e for j, e in enumerate(nonloop) if (pattern >> j) & 1}
        for e, (u, v) in enumerate(g.edges):
            tail, head = ((v, u) if e in flipped else (u, v))
            out[tail] += 1
            inc[head] += 1
        outs.add(tuple(out))
        ins.add(tuple(inc))
        scores.add(tuple(o - i for o, i in zip(out, inc)))
    return outs, ins, scores


def subdigraph_score_py(g: Multigraph, orientation_bits: int, subset: int) -> tuple[int, ...]:
    """Score vector of the spanning subdigraph keeping exactly ``subset``."""
    s = [0] * g.num_vertices
    for e, (u, v) in enumerate(g.edges):
        if not (subset >> e) & 1 or u == v:
            continue
        tail, head = ((v, u) if (orientation_bits >> e) & 1 else (u, v))
        s[tail] += 1
        s[head] -= 1
    return tuple(s)


def _biconnected_blocks(g: Multigraph) -> list[list[int]]:
    """Edge ids grouped into biconnected blocks (loops are their own block)."""
    n = g.num_vertices
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    blocks: list[list[int]] = []
    for e, (u, v) in enumerate(g.edges):
        if u == v:
            blocks.append([e])
        else:
            adj[u].append((v, e))
            adj[v].append((u, e))

    disc = [-1] * n
    low = [0] * n
    edge_stack: list[int] = []
    timer = [0]

    def dfs(x: int, in_edge: int) -> None:
        disc[x] = low[x] = timer[0]
        timer[0] += 1
        for y, e in adj[x]:
            if e == in_edge:
                continue
            if disc[y] == -1:
                edge_stack.append(e)
                dfs(y, e)
                low[x] = min(low[x], low[y])
                if low[y] >= disc[x]:
                    block = []
                    while True:
                        top = edge_stack.pop()
                        block.append(top)
                        if top == e:
                            break
                    blocks.append(block)
            elif disc[y] < disc[x]:
                edge_stack.append(e)
                low[x] = min(low[x], disc[y])

    for root in range(n):
        if disc[root] == -1:
            dfs(root, -1)
    return blocks


def is_cactus(g: Multigraph) -> bool:
    """Connected, and every biconnected block is a single edge or a cycle."""
    if g.num_vertices == 0:
        return False
    if g.components_count(g.full_edge_subset) != 1:
        return False
    for block in _biconnected_blocks(g):
        if len(block) == 1:
            continue
        verts = {x for e in block for x in g.edges[e]}
        if len(block) != len(verts):
            return False
        deg_in_block: dict[int, int] = {}
        for e in block:
            u, v = g.edges[e]
            deg_in_block[u] = deg_in_block.get(u, 0) + 1
            deg_in_block[v] = deg_in_block.get(v, 0) + 1
        if any(d != 2 for d in deg_in_block.values()):
            return False
    return True
