"""Multigraph representation, deletion/contraction, and the edge-list format."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from forestry import (
    EdgeListParseError,
    InvalidEdgeId,
    LoopContraction,
    Multigraph,
    SizeMismatch,
    complete,
    count_forests_brute,
    cycle,
    parse_edge_list,
    random_multigraph,
    t21,
)
from oracles import is_acyclic_dfs


def test_edges_are_normalized_and_validated():
    g = Multigraph(3, ((2, 0), (1, 2)))
    assert g.edges == ((0, 2), (1, 2))
    with pytest.raises(ValueError):
        Multigraph(2, ((0, 2),))


def test_delete_edge_cycle_becomes_path():
    g = cycle(4).delete_edge(0)
    assert g.num_vertices == 4 and g.edge_count == 3
    assert g.components_count(g.full_edge_subset) == 1
    assert sorted(g.degrees()) == [1, 1, 2, 2]


def test_delete_loop_gives_edgeless_graph():
    g = cycle(1).delete_edge(0)
    assert g.num_vertices == 1 and g.edge_count == 0


def test_delete_k3_edge_leaves_path_with_four_forests():
    for e in range(3):
        assert count_forests_brute(complete(3).delete_edge(e)) == 4


def test_contract_cycle4_gives_triangle():
    g = cycle(4).contract_edge(0)
    assert g.num_vertices == 3
    assert sorted(g.edges) == sorted(cycle(3).edges)


def test_contract_parallel_pair_gives_loop():
    g = Multigraph(2, ((0, 1), (0, 1))).contract_edge(0)
    assert g.num_vertices == 1
    assert g.edges == ((0, 0),)


def test_contract_k3_edge_gives_parallel_pair():
    g = complete(3).contract_edge(0)
    assert g.num_vertices == 2
    assert g.edges == ((0, 1), (0, 1))
    assert t21(g) == 3


def test_contract_rejects_loops_and_bad_ids():
    with pytest.raises(LoopContraction):
        cycle(1).contract_edge(0)
    with pytest.raises(InvalidEdgeId):
        cycle(3).contract_edge(3)
    with pytest.raises(InvalidEdgeId):
        cycle(3).delete_edge(-1)


def test_contraction_relabels_downward():
    # contracting (1, 3) inside a 4-vertex graph: vertex 3 merges into 1
    g = Multigraph(4, ((1, 3), (2, 3), (0, 3)))
    c = g.contract_edge(0)
    assert c.num_vertices == 3
    assert sorted(c.edges) == [(0, 1), (1, 2)]


def test_components_count_examples():
    c4 = cycle(4)
    assert c4.components_count(0) == 4
    assert c4.components_count(c4.full_edge_subset) == 1
    # opposite edges (v1v2 and v3v4)
    assert c4.components_count(0b0101) == 2
    with pytest.raises(SizeMismatch):
        c4.components_count(1 << 4)


def test_is_bipartite():
    got = cycle(4).is_bipartite()
    assert got is not None
    left, right = got
    assert sorted(left + right) == [0, 1, 2, 3]
    for u, v in cycle(4).edges:
        assert (u in left) != (v in left)
    assert cycle(3).is_bipartite() is None
    assert cycle(1).is_bipartite() is None


def test_isolated_vertices_go_left():
    g = Multigraph(3, ((1, 2),))
    left, right = g.is_bipartite()
    assert 0 in left


def test_bridges_and_loops():
    c4 = cycle(4)
    assert not any(c4.is_bridge(e) for e in range(4))
    single = Multigraph(2, ((0, 1),))
    assert single.is_bridge(0)
    loop = cycle(1)
    assert loop.is_loop(0) and not loop.is_bridge(0)


def test_degree_sequence_examples():
    c4 = cycle(4)
    assert c4.degree_sequence(0b0101) == (1, 1, 1, 1)
    assert c4.degree_sequence(0) == (0, 0, 0, 0)
    assert cycle(1).degree_sequence(1) == (2,)


def test_edge_list_round_trip():
    g = Multigraph(3, ((0, 0), (0, 1), (0, 1), (1, 2)))
    text = g.to_edge_list()
    assert text == "3 4\n1 1\n1 2\n1 2\n2 3\n"
    assert parse_edge_list(text) == g


def test_edge_list_comments_and_blanks():
    text = "# a triangle\n\n3 3\n1 2\n# middle\n2 3\n1 3\n\n"
    assert parse_edge_list(text) == complete(3)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only comments\n",
        "2\n",
        "2 2\n1 2\n",
        "2 1\n1 2\n2 1\n",
        "2 1\n1 3\n",
        "2 1\n1 x\n",
        "-1 0\n",
    ],
)
def test_edge_list_parse_errors(text):
    with pytest.raises(EdgeListParseError):
        parse_edge_list(text)


def test_component_bound_and_forest_characterization(corpus):
    """k(A) >= n - |A| always; equality exactly on DFS-acyclic subsets."""
    for _, g in corpus:
        if g.edge_count > 10:
            continue
        n = g.num_vertices
        for a in range(1 << g.edge_count):
            k = g.components_count(a)
            size = bin(a).count("1")
            assert k >= n - size
            assert (k == n - size) == is_acyclic_dfs(g, a)


def test_delete_then_reinsert_recovers_graph(corpus):
    for _, g in corpus[:60]:
        for e in range(g.edge_count):
            back = g.delete_edge(e).edges + (g.edges[e],)
            assert sorted(back) == sorted(g.edges)


def test_contract_changes_counts_by_one(corpus):
    for _, g in corpus:
        for e in range(g.edge_count):
            if g.is_loop(e):
                continue
            c = g.contract_edge(e)
            assert c.num_vertices == g.num_vertices - 1
            assert c.edge_count == g.edge_count - 1


@given(
    st.integers(min_value=0, max_value=2**64 - 1),
    st.integers(min_value=1, max_value=7),
    st.integers(min_value=0, max_value=12),
)
def test_degree_sum_is_twice_edge_count(seed, n, m):
    g = random_multigraph(n, m, True, seed)
    assert sum(g.degrees()) == 2 * g.edge_count
