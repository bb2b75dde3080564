"""Graph family constructors, deterministic and seeded.

Every generator is a pure function of its parameters (plus the seed for the
random families), built on the splitmix64 stream in ``rng``, so the same
call reproduces the same labeled graph anywhere.

Naming convention for the book family: ``book(r, m)`` glues m cycles of
length r along one shared edge {v1, v2}. Other glued-cycle conventions
exist in the literature; this one is the most common and is the one used
throughout this package.
"""

from __future__ import annotations

from .errors import InvalidParameter
from .multigraph import Multigraph
from .rng import SplitMix64


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameter(msg)


def cycle(n: int) -> Multigraph:
    """Cycle on n vertices; cycle(1) is a single loop, cycle(2) a parallel pair."""
    _require(n >= 1, f"cycle needs n >= 1, got {n}")
    if n == 1:
        return Multigraph(1, ((0, 0),))
    edges = tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),)
    return Multigraph(n, edges)


def path(n: int) -> Multigraph:
    """Path on n vertices (n - 1 edges)."""
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Multigraph:
    """Complete simple graph K_n."""
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    edges = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    return Multigraph(n, edges)


def complete_bipartite(m: int, n: int) -> Multigraph:
    """K_{m,n} with sides L = 0..m-1 and R = m..m+n-1."""
    _require(m >= 1 and n >= 1, f"complete_bipartite needs m, n >= 1, got {m}, {n}")
    edges = tuple((i, m + j) for i in range(m) for j in range(n))
    return Multigraph(m + n, edges)


def book(page_cycle_len: int, pages: int) -> Multigraph:
    """m cycles of length r sharing the single common edge {v1, v2}.

    Vertices: 2 + pages * (r - 2). Non-bipartite exactly when r is odd.
    """
    r, m = page_cycle_len, pages
    _require(r >= 3, f"book needs page cycle length >= 3, got {r}")
    _require(m >= 1, f"book needs at least one page, got {m}")
    edges = [(0, 1)]
    nxt = 2
    for _ in range(m):
        chain = [0] + list(range(nxt, nxt + r - 2)) + [1]
        nxt += r - 2
        edges.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
    return Multigraph(2 + m * (r - 2), tuple(edges))


def random_cactus(n: int, seed: int) -> Multigraph:
    """Connected graph in which every edge lies on at most one cycle.

    Grown from a single vertex; each step draws, in this order, an
    attachment vertex a, a kind bit (0 pendant edge, 1 cycle), and for a
    cycle an index into the feasible lengths {3, 4, 5}. A cycle of length L
    adds L - 1 new vertices on a path from a back to a; when no cycle fits
    into the remaining vertex budget the step falls back to a pendant edge.
    """
    _require(n >= 1, f"random_cactus needs n >= 1, got {n}")
    rng = SplitMix64(seed)
    edges: list[tuple[int, int]] = []
    cur = 1
    while cur < n:
        a = rng.below(cur)
        kind = rng.below(2)
        feasible = [length for length in (3, 4, 5) if length - 1 <= n - cur]
        if kind == 1 and feasible:
            length = feasible[rng.below(len(feasible))]
            ring = [a] + list(range(cur, cur + length - 1)) + [a]
            edges.extend((ring[i], ring[i + 1]) for i in range(length))
            cur += length - 1
        else:
            edges.append((a, cur))
            cur += 1
    return Multigraph(n, tuple(edges))


def random_bipartite(m: int, n: int, edge_prob: float, seed: int) -> Multigraph:
    """Each L x R pair becomes an edge independently with probability edge_prob.

    Pairs are visited in lexicographic order; pair (i, j) is kept when the
    next stream value is below floor(edge_prob * 2^64).
    """
    _require(m >= 1 and n >= 1, f"random_bipartite needs m, n >= 1, got {m}, {n}")
    _require(0.0 <= edge_prob <= 1.0, f"edge_prob must be in [0, 1], got {edge_prob}")
    rng = SplitMix64(seed)
    threshold = int(edge_prob * 2.0**64)
    edges = tuple(
        (i, m + j)
        for i in range(m)
        for j in range(n)
        if rng.next_u64() < threshold
    )
    return Multigraph(m + n, edges)


def random_multigraph(n: int, edge_count: int, allow_loops: bool, seed: int) -> Multigraph:
    """edge_count endpoint pairs drawn uniformly with replacement.

    Each edge draws u then v; with loops disallowed, v is redrawn until it
    differs from u.
    """
    _require(n >= 1, f"random_multigraph needs n >= 1, got {n}")
    _require(edge_count >= 0, f"edge_count must be nonnegative, got {edge_count}")
    _require(
        allow_loops or n >= 2 or edge_count == 0,
        "a single-vertex graph can only have loops",
    )
    rng = SplitMix64(seed)
    edges = []
    for _ in range(edge_count):
        u = rng.below(n)
        v = rng.below(n)
        while not allow_loops and v == u:
            v = rng.below(n)
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


# -- family specs ("name:params") used by the CLI and the sweep harness ----

_INT = "int"
_FLOAT = "float"
_BOOL = "bool"

# name -> (parameter kinds, constructor takes a trailing seed)
FAMILIES: dict[str, tuple[tuple[str, ...], bool]] = {
    "cycle": ((_INT,), False),
    "path": ((_INT,), False),
    "complete": ((_INT,), False),
    "complete_bipartite": ((_INT, _INT), False),
    "book": ((_INT, _INT), False),
    "random_cactus": ((_INT,), True),
    "random_bipartite": ((_INT, _INT, _FLOAT), True),
    "random_multigraph": ((_INT, _INT, _BOOL), True),
}

_CONSTRUCTORS = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "book": book,
    "random_cactus": random_cactus,
    "random_bipartite": random_bipartite,
    "random_multigraph": random_multigraph,
}


def _parse_param(kind: str, raw: str, spec: str):
    raw = raw.strip()
    try:
        if kind == _INT:
            return int(raw)
        if kind == _FLOAT:
            return float(raw)
        lowered = raw.lower()
        if lowered in ("1", "true", "yes"):
            return True
        if lowered in ("0", "false", "no"):
            return False
        raise ValueError(raw)
    except ValueError:
        raise InvalidParameter(f"bad parameter {raw!r} in generator spec {spec!r}") from None


def from_spec(spec: str, seed: int = 0) -> Multigraph:
    """Build a graph from "family:params", e.g. "cycle:4" or "random_bipartite:3,3,0.5".

    Parameters are comma-separated; the seed applies to the random families
    and is ignored by the deterministic ones.
    """
    name, sep, params = spec.partition(":")
    name = name.strip()
    if name not in FAMILIES:
        known = ", ".join(sorted(FAMILIES))
        raise InvalidParameter(f"unknown family {name!r} (known: {known})")
    kinds, takes_seed = FAMILIES[name]
    raw_parts = [p for p in params.split(",") if p.strip()] if sep else []
    if len(raw_parts) != len(kinds):
        raise InvalidParameter(
            f"family {name!r} takes {len(kinds)} parameters, got {len(raw_parts)} in {spec!r}"
        )
    args = [_parse_param(kind, raw, spec) for kind, raw in zip(kinds, raw_parts)]
    if takes_seed:
        args.append(seed)
    return _CONSTRUCTORS[name](*args)
