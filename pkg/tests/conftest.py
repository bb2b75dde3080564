"""Shared fixtures: JIT warmup and the fixed small-graph corpora.

The main corpus is what the exhaustive property tests sweep: at least 300
graphs with up to 6 vertices and 9 edges, loops and parallel edges
included, built deterministically (named families plus seeded random
multigraphs). The bipartite corpus holds 200 seeded bipartite multigraphs
(parallel edges allowed) with up to 8 vertices and 14 edges.
"""

import pytest
from hypothesis import settings

from forestry import (
    Multigraph,
    book,
    complete,
    complete_bipartite,
    count_degree_sequences,
    count_distinct_outdeg,
    cycle,
    path,
    random_multigraph,
)
from forestry import kernels
from forestry.rng import SplitMix64

settings.register_profile("suite", deadline=None, max_examples=40)
settings.load_profile("suite")

_CORPUS_SEED = 0x5EED0C0DE
_BIPARTITE_SEED = 0xB1A2B1A2


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # First kernel call JIT-compiles; keep that out of the timed tests.
    g = cycle(3)
    kernels.subset_component_histogram(g.num_vertices, g.edges)
    count_degree_sequences(g)
    count_distinct_outdeg(g)


def build_corpus() -> list[tuple[str, Multigraph]]:
    graphs: list[tuple[str, Multigraph]] = []
    for n in range(1, 7):
        graphs.append((f"cycle:{n}", cycle(n)))
        graphs.append((f"path:{n}", path(n)))
    for n in range(1, 5):
        graphs.append((f"complete:{n}", complete(n)))
    for m, n in ((1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)):
        graphs.append((f"complete_bipartite:{m},{n}", complete_bipartite(m, n)))
    for r, m in ((3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1)):
        graphs.append((f"book:{r},{m}", book(r, m)))
    graphs.append(("parallel_pair", Multigraph(2, ((0, 1), (0, 1)))))
    graphs.append(("double_loop", Multigraph(1, ((0, 0), (0, 0)))))
    graphs.append(("loop_tail", Multigraph(3, ((0, 1), (0, 1), (1, 2), (2, 2)))))

    rng = SplitMix64(_CORPUS_SEED)
    seen = {(g.num_vertices, g.edges) for _, g in graphs}
    i = 0
    while len(graphs) < 320:
        n = 1 + rng.below(6)
        m = rng.below(10)
        allow_loops = n == 1 or rng.below(2) == 1
        g = random_multigraph(n, m, allow_loops, rng.next_u64())
        key = (g.num_vertices, g.edges)
        if key in seen:
            continue
        seen.add(key)
        graphs.append((f"random_multigraph[{i}]", g))
        i += 1
    return graphs


def build_bipartite_corpus() -> list[Multigraph]:
    rng = SplitMix64(_BIPARTITE_SEED)
    out = []
    for _ in range(200):
        left = 1 + rng.below(4)
        right = 1 + rng.below(4)
        m = rng.below(15)
        edges = tuple(
            (rng.below(left), left + rng.below(right)) for _ in range(m)
        )
        out.append(Multigraph(left + right, edges))
    return out


@pytest.fixture(scope="session")
def corpus() -> list[tuple[str, Multigraph]]:
    return build_corpus()


@pytest.fixture(scope="session")
def corpus_loopfree8(corpus) -> list[tuple[str, Multigraph]]:
    return [
        (tag, g)
        for tag, g in corpus
        if g.edge_count <= 8 and all(u != v for u, v in g.edges)
    ]


@pytest.fixture(scope="session")
def bipartite_corpus() -> list[Multigraph]:
    return build_bipartite_corpus()
