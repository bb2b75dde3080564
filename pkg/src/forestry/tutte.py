"""Tutte polynomial and forest counting.

T(x, y) is computed by two independent routes that the tests hold against
each other: the 2^|E| subset expansion (a component-count histogram kernel
followed by binomial expansion of (x-1)^a (y-1)^b) and the classical
deletion-contraction recurrence. The (2, 1) evaluation, which counts the
forests of the graph, additionally gets a dedicated memoized recursion
(``t21``) that scales far beyond the enumeration cap:

    t21(G) = t21(G - e) + t21(G / e)   for any non-loop edge e,
    loops are deleted outright, and an edgeless graph counts 1.

All counts are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import kernels
from .limits import DEFAULT_ENUMERATION_CAP, check_cap
from .multigraph import Multigraph


@dataclass(frozen=True)
class TuttePolynomial:
    """Sparse T(x, y): map from (x exponent, y exponent) to coefficient.

    Treat instances as immutable values. Zero coefficients are dropped on
    construction; for any graph the remaining coefficients are positive.
    """

    coeffs: dict[tuple[int, int], int]

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", {k: v for k, v in self.coeffs.items() if v != 0}
        )

    def evaluate(self, x: int, y: int) -> int:
        """Exact integer evaluation (may be negative for negative arguments)."""
        return sum(c * x**i * y**j for (i, j), c in self.coeffs.items())

    def terms(self) -> list[tuple[int, int, int]]:
        """(i, j, coefficient) sorted by (i, j)."""
        return [(i, j, self.coeffs[i, j]) for i, j in sorted(self.coeffs)]

    def to_json_obj(self) -> list[dict[str, object]]:
        """Coefficients as decimal strings so 64-bit JSON consumers stay exact."""
        return [{"i": i, "j": j, "coeff": str(c)} for i, j, c in self.terms()]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, j in sorted(self.coeffs, reverse=True):
            c = self.coeffs[i, j]
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            if c != 1 or not factors:
                factors.insert(0, str(c))
            parts.append("*".join(factors))
        return " + ".join(parts)


_ONE = {(0, 0): 1}


def count_forests_brute(
    g: Multigraph,
    cap: int = DEFAULT_ENUMERATION_CAP,
    workers: int = 1,
) -> int:
    """Number of acyclic edge subsets, counting the empty one.

    Checks every subset A for k(A) = |V| - |A|, which holds exactly for the
    forests; this is the exhaustive oracle the fast path is tested against.
    """
    check_cap(g.edge_count, cap, "brute-force forest count")
    hist = kernels.subset_component_histogram(g.num_vertices, g.edges, workers)
    n = g.num_vertices
    total = 0
    for c in range(g.edge_count + 1):
        k = n - c
        if 0 <= k <= n:
            total += int(hist[k, c])
    return total


def tutte_subset_expansion(
    g: Multigraph,
    cap: int = DEFAULT_ENUMERATION_CAP,
    workers: int = 1,
) -> TuttePolynomial:
    """T(x, y) summed over all 2^|E| subsets.

    The kernel histograms subsets by (component count, size); each cell
    contributes count * (x-1)^(k - k(E)) * (y-1)^(k + c - |V|), expanded
    into the monomial basis with binomial coefficients.
    """
    check_cap(g.edge_count, cap, "Tutte subset expansion")
    hist = kernels.subset_component_histogram(g.num_vertices, g.edges, workers)
    k_full = g.components_count(g.full_edge_subset)
    n = g.num_vertices
    coeffs: dict[tuple[int, int], int] = {}
    for k in range(n + 1):
        for c in range(g.edge_count + 1):
            cnt = int(hist[k, c])
            if cnt == 0:
                continue
            a = k - k_full
            b = k + c - n
            for i in range(a + 1):
                xi = comb(a, i) * (-1) ** (a - i)
                for j in range(b + 1):
                    term = cnt * xi * comb(b, j) * (-1) ** (b - j)
                    if term:
                        key = (i, j)
                        coeffs[key] = coeffs.get(key, 0) + term
    return TuttePolynomial(coeffs)


# -- deletion-contraction -------------------------------------------------


def _strip_isolated(edges: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    """Relabel so every vertex has an incident edge (exact for T: an isolated
    vertex shifts k(A) and k(E) together and |A| - |V| likewise)."""
    live = sorted({x for e in edges for x in e})
    remap = {x: i for i, x in enumerate(live)}
    return tuple(sorted((remap[u], remap[v]) for u, v in edges))


def _contract(edges, i: int) -> tuple[tuple[int, int], ...]:
    """Contract edge position i of an isolated-free edge tuple; keeps loops."""
    a, b = edges[i]
    out = []
    for j, (u, v) in enumerate(edges):
        if j == i:
            continue
        uu = a if u == b else (u - 1 if u > b else u)
        vv = a if v == b else (v - 1 if v > b else v)
        out.append((uu, vv) if uu <= vv else (vv, uu))
    return tuple(out)


def _pick_edge(edges) -> int:
    """Lowest loop if any, else the edge with maximal endpoint-degree sum.

    Recursing on the densest edge first empirically shrinks the recursion
    tree; any choice would be correct.
    """
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    best = -1
    best_score = -1
    for i, (u, v) in enumerate(edges):
        if u == v:
            return i
        score = deg[u] + deg[v]
        if score > best_score:
            best, best_score = i, score
    return best


def t21(g: Multigraph) -> int:
    """T(2, 1): the number of forests, by memoized deletion-contraction.

    The memo key is the exact labeled graph (sorted edge multiset) after
    dropping loops, which no forest can use, and isolated vertices, which
    change nothing; contraction always merges into min(u, v), which already
    makes many recursion states collide. No enumeration cap applies, but
    the worst case is exponential.
    """
    memo: dict[tuple, int] = {}

    def normalize(edges):
        return _strip_isolated(tuple(e for e in edges if e[0] != e[1]))

    def rec(key) -> int:
        if not key:
            return 1
        val = memo.get(key)
        if val is not None:
            return val
        i = _pick_edge(key)
        deleted = normalize(key[:i] + key[i + 1:])
        contracted = normalize(_contract(key, i))
        val = rec(deleted) + rec(contracted)
        memo[key] = val
        return val

    return rec(normalize(g.edges))


def _padd(p: dict, q: dict) -> dict:
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + v
    return out


def _pshift(p: dict, dx: int, dy: int) -> dict:
    return {(i + dx, j + dy): v for (i, j), v in p.items()}


def _is_bridge_in(edges, i: int) -> bool:
    labels = {x: x for e in edges for x in e}

    def find(x):
        while labels[x] != x:
            labels[x] = labels[labels[x]]
            x = labels[x]
        return x

    for j, (u, v) in enumerate(edges):
        if j != i:
            ru, rv = find(u), find(v)
            if ru != rv:
                labels[rv] = ru
    u, v = edges[i]
    return find(u) != find(v)


def tutte_deletion_contraction(g: Multigraph) -> TuttePolynomial:
    """T(x, y) by the recurrence: bridge -> x*T(G-e), loop -> y*T(G-e),
    otherwise T(G-e) + T(G/e); an edgeless graph is 1.

    Memoized on the same labeled-graph key as ``t21`` except that loops stay
    in the key (they carry y factors here).
    """
    memo: dict[tuple, dict] = {}

    def rec(key) -> dict:
        if not key:
            return _ONE
        val = memo.get(key)
        if val is not None:
            return val
        i = _pick_edge(key)
        u, v = key[i]
        if u == v:
            val = _pshift(rec(_strip_isolated(key[:i] + key[i + 1:])), 0, 1)
        elif _is_bridge_in(key, i):
            val = _pshift(rec(_strip_isolated(key[:i] + key[i + 1:])), 1, 0)
        else:
            deleted = rec(_strip_isolated(key[:i] + key[i + 1:]))
            contracted = rec(_strip_isolated(_contract(key, i)))
            val = _padd(deleted, contracted)
        memo[key] = val
        return val

    return TuttePolynomial(rec(_strip_isolated(g.edges)))
