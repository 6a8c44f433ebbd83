import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from booklab.errors import ResourceLimitError
from booklab.graphs import (
    Graph,
    VertexSet,
    clique_mask_list,
    clique_number,
    complete_graph,
    contains_subgraph,
    contains_subgraph_at,
    count_cliques,
    count_cliques_by_subsets,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_cliques,
    from_edges,
    from_mask,
    has_clique,
    join,
    path_graph,
    to_mask,
    turan_graph,
    turan_part_sizes,
)

from conftest import graphs, oracle_contains_subgraph, oracle_count_cliques


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edges(-1, [])


def test_vertex_set_basics():
    s = VertexSet.of(0, 2, 5)
    assert len(s) == 3
    assert 2 in s and 1 not in s
    assert s.vertices() == (0, 2, 5)
    assert s.overlap(VertexSet.of(2, 3)) == 1


def test_edges_are_lexicographic():
    g = from_edges(4, [(2, 3), (0, 1), (1, 3)])
    assert tuple(g.edges()) == ((0, 1), (1, 3), (2, 3))
    assert g.edge_count() == 3
    assert g.degree(3) == 2


@given(graphs(max_n=7))
def test_mask_roundtrip(g):
    assert from_mask(g.n, to_mask(g)) == g


@given(graphs(max_n=7))
def test_permute_preserves_edge_count(g):
    perm = tuple(reversed(range(g.n)))
    assert g.permute(perm).edge_count() == g.edge_count()


@given(graphs(max_n=7), st.integers(min_value=0, max_value=8))
def test_count_cliques_matches_subset_oracle(g, r):
    assert count_cliques(g, r) == oracle_count_cliques(g, r)


@given(graphs(max_n=7), st.integers(min_value=1, max_value=5))
def test_count_by_subsets_agrees(g, r):
    assert count_cliques_by_subsets(g, r) == count_cliques(g, r)


@given(graphs(min_n=1, max_n=7), st.integers(min_value=1, max_value=5))
def test_enumerate_cliques_consistent(g, r):
    cliques = list(enumerate_cliques(g, r))
    assert len(cliques) == count_cliques(g, r)
    assert len(set(cliques)) == len(cliques)
    for c in cliques:
        vs = c.vertices()
        assert len(vs) == r
        assert all(g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :])


@given(graphs(max_n=7), st.integers(min_value=0, max_value=6))
def test_has_clique_agrees_with_count(g, r):
    assert has_clique(g, r) == (count_cliques(g, r) > 0)


@given(graphs(min_n=2, max_n=7))
def test_has_clique_within_restricts(g):
    within = (1 << (g.n // 2)) - 1
    sub = from_edges(
        g.n, [(a, b) for a, b in g.edges() if within >> a & 1 and within >> b & 1]
    )
    for r in range(4):
        assert has_clique(g, r, within=within) == has_clique(sub, r)


def test_clique_number_examples():
    assert clique_number(empty_graph(5)) == 1
    assert clique_number(complete_graph(6)) == 6
    assert clique_number(cycle_graph(5)) == 2
    assert clique_number(turan_graph(9, 3)) == 3


def test_clique_mask_budget():
    with pytest.raises(ResourceLimitError):
        clique_mask_list(complete_graph(16), 2, budget=100)


def test_turan_part_sizes():
    assert turan_part_sizes(10, 3) == (4, 3, 3)
    assert turan_part_sizes(3, 5) == (1, 1, 1, 0, 0)
    with pytest.raises(ValueError):
        turan_part_sizes(3, 0)


def test_turan_graph_shape():
    g = turan_graph(7, 3)
    # parts {0,3,6}, {1,4}, {2,5}; edges only across parts
    assert not g.has_edge(0, 3)
    assert g.has_edge(0, 1)
    assert g.edge_count() == 16
    assert count_cliques(g, 3) == 3 * 2 * 2


def test_join_and_union():
    g = join(complete_graph(2), empty_graph(3))
    assert g.n == 5
    assert g.edge_count() == 1 + 6
    assert count_cliques(g, 3) == 3
    h = disjoint_union(complete_graph(3), complete_graph(3))
    assert h.edge_count() == 6
    assert count_cliques(h, 3) == 2
    assert not h.has_edge(0, 3)


def test_path_graph():
    g = path_graph(4)
    assert tuple(g.edges()) == ((0, 1), (1, 2), (2, 3))


@given(graphs(max_n=6), graphs(max_n=4))
@settings(max_examples=60)
def test_contains_subgraph_matches_oracle(g, h):
    if h.n == 0:
        return
    assert contains_subgraph(g, h) == oracle_contains_subgraph(g, h)


@given(graphs(min_n=1, max_n=6))
def test_contains_subgraph_at_pins_vertex(g):
    h = path_graph(2)
    for v in range(g.n):
        expected = g.degree(v) > 0
        assert contains_subgraph_at(g, h, v) == expected


def test_contains_subgraph_triangle_in_bowtie():
    bowtie = from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    assert contains_subgraph(bowtie, complete_graph(3))
    assert not contains_subgraph(bowtie, complete_graph(4))
    assert contains_subgraph_at(bowtie, complete_graph(3), 0)
    assert contains_subgraph_at(bowtie, cycle_graph(4), 2) is False
