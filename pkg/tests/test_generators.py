"""Graph family constructors and the family-spec parser."""

import pytest

from forestry import (
    InvalidParameter,
    Multigraph,
    book,
    complete,
    complete_bipartite,
    count_forests_brute,
    cycle,
    from_spec,
    path,
    random_bipartite,
    random_cactus,
    random_multigraph,
)
from oracles import is_cactus


def test_cycle_shapes():
    assert cycle(4).edge_count == 4 and cycle(4).is_bipartite() is not None
    assert cycle(3).is_bipartite() is None
    assert cycle(1).edges == ((0, 0),)
    assert cycle(2).edges == ((0, 1), (0, 1))


def test_path_and_complete():
    assert path(1).edge_count == 0
    assert path(4).edge_count == 3
    assert sorted(complete(3).edges) == sorted(cycle(3).edges)
    assert complete(5).edge_count == 10
    assert count_forests_brute(complete(5)) == 291


def test_complete_bipartite():
    assert complete_bipartite(1, 1).edges == ((0, 1),)
    g = complete_bipartite(2, 3)
    assert g.num_vertices == 5 and g.edge_count == 6
    left, right = g.is_bipartite()
    assert left == (0, 1) and right == (2, 3, 4)


def test_book_shapes():
    assert sorted(book(3, 1).edges) == sorted(cycle(3).edges)
    two_pages = book(3, 2)
    assert two_pages.num_vertices == 4 and two_pages.edge_count == 5
    assert book(4, 3).num_vertices == 2 + 3 * 2
    assert book(4, 3).edge_count == 1 + 3 * 3


@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_book_bipartite_iff_even_pages_cycle(r):
    assert (book(r, 2).is_bipartite() is None) == (r % 2 == 1)


def test_random_cactus():
    assert random_cactus(1, 7).edge_count == 0
    for seed in range(25):
        g = random_cactus(8, seed)
        assert g.num_vertices == 8
        assert is_cactus(g)
    assert random_cactus(8, 3) == random_cactus(8, 3)


def test_random_bipartite():
    assert random_bipartite(2, 2, 1.0, 9) == complete_bipartite(2, 2)
    assert random_bipartite(3, 3, 0.0, 9).edge_count == 0
    for seed in range(25):
        g = random_bipartite(3, 4, 0.5, seed)
        assert g.is_bipartite() is not None
    assert random_bipartite(3, 4, 0.5, 11) == random_bipartite(3, 4, 0.5, 11)


def test_random_multigraph():
    g = random_multigraph(1, 3, True, 5)
    assert g.edges == ((0, 0), (0, 0), (0, 0))
    g = random_multigraph(5, 12, False, 5)
    assert g.edge_count == 12 and all(u != v for u, v in g.edges)
    assert random_multigraph(4, 9, True, 2) == random_multigraph(4, 9, True, 2)
    assert random_multigraph(4, 9, True, 2) != random_multigraph(4, 9, True, 3)


@pytest.mark.parametrize(
    "call",
    [
        lambda: cycle(0),
        lambda: path(0),
        lambda: complete(0),
        lambda: complete_bipartite(0, 2),
        lambda: book(2, 1),
        lambda: book(3, 0),
        lambda: random_cactus(0, 1),
        lambda: random_bipartite(1, 1, 1.5, 1),
        lambda: random_multigraph(1, 3, False, 1),
        lambda: random_multigraph(3, -1, True, 1),
    ],
)
def test_invalid_parameters(call):
    with pytest.raises(InvalidParameter):
        call()


def test_from_spec():
    assert from_spec("cycle:4") == cycle(4)
    assert from_spec("complete_bipartite:2,3") == complete_bipartite(2, 3)
    assert from_spec("random_bipartite:3,3,0.5", seed=7) == random_bipartite(3, 3, 0.5, 7)
    assert from_spec("random_multigraph:4,6,true", seed=1) == random_multigraph(4, 6, True, 1)
    assert from_spec("random_multigraph:4,6,0", seed=1) == random_multigraph(4, 6, False, 1)


@pytest.mark.parametrize(
    "spec",
    ["nope:3", "cycle", "cycle:", "cycle:3,4", "cycle:x", "random_bipartite:2,2", "book:3"],
)
def test_from_spec_errors(spec):
    with pytest.raises(InvalidParameter):
        from_spec(spec)


def test_generators_produce_valid_multigraphs():
    for g in (cycle(5), book(4, 2), random_cactus(9, 1), random_multigraph(3, 7, True, 1)):
        assert isinstance(g, Multigraph)
        assert all(0 <= u <= v < g.num_vertices for u, v in g.edges)
