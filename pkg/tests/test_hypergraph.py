import random
from math import comb

import pytest

from conftest import assert_valid_path_family, corpus, random_connected_hypergraph
from ghzcert.errors import (
    BadLevelError,
    DisconnectedError,
    EmptyEdgeError,
    SameVertexError,
    TooLargeError,
    TooManyEdgesError,
    VertexOutOfRangeError,
)
from ghzcert.hypergraph import (
    Graph,
    Hypergraph,
    complete_uniform,
    cycle_hypergraph,
    edge_connectivity,
    edge_connectivity_by_removal,
    edge_disjoint_paths,
    graph,
    graph_is_connected,
    hypergraph,
    is_connected,
    line_graph,
    min_cut,
    min_cut_rank,
    min_cut_separating,
    path_hypergraph,
    single_full_edge,
    validate,
    vertex_connectivity,
)


def test_validate_reports_edge_index():
    with pytest.raises(EmptyEdgeError) as err:
        validate(hypergraph(3, [{1, 2}, set()]))
    assert "1" in str(err.value)
    with pytest.raises(VertexOutOfRangeError):
        validate(hypergraph(3, [{1, 4}]))
    with pytest.raises(BadLevelError):
        validate(hypergraph(3, [{1, 2}], [1]))


def test_is_connected():
    assert is_connected(path_hypergraph(5))
    assert not is_connected(hypergraph(4, [{1, 2}, {3, 4}]))
    assert is_connected(hypergraph(1, []))
    assert not is_connected(hypergraph(2, []))
    # a hyperedge glues all its vertices at once
    assert is_connected(single_full_edge(6))


def test_connectivity_table():
    assert edge_connectivity(cycle_hypergraph(3)) == 2
    assert edge_connectivity(cycle_hypergraph(4)) == 2
    assert edge_connectivity(cycle_hypergraph(5)) == 2
    for k in range(2, 7):
        assert edge_connectivity(path_hypergraph(k)) == 1
    assert edge_connectivity(complete_uniform(4, 2)) == 3
    assert edge_connectivity(complete_uniform(5, 2)) == 4
    assert edge_connectivity(complete_uniform(4, 3)) == 3
    assert edge_connectivity(single_full_edge(4)) == 1


def test_complete_uniform_formula():
    for k in range(2, 6):
        for l in range(2, k + 1):
            assert edge_connectivity(complete_uniform(k, l)) == comb(k - 1, l - 1)


def test_min_cut_witness_is_consistent():
    for _, h in corpus():
        cut = min_cut(h)
        assert cut.crossing == h.crossing(cut.side)
        assert len(cut.crossing) == edge_connectivity(h)
        assert 1 in cut.side and len(cut.side) < h.k


def test_weighted_cut_differs_from_unweighted():
    # one heavy edge against two light parallel ones
    h = hypergraph(3, [{1, 2}, {1, 3}, {1, 3}], [5, 2, 2])
    plain = min_cut(h)
    weighted = min_cut(h, weighted=True)
    assert len(plain.crossing) == 1 and plain.rank == 5
    assert len(weighted.crossing) == 2 and weighted.rank == 4
    assert min_cut_rank(h) == 4


def test_min_cut_rank_levels():
    assert min_cut_rank(cycle_hypergraph(3)) == 4
    assert min_cut_rank(single_full_edge(4, level=3)) == 3


def test_removal_oracle_matches_enumeration():
    rng = random.Random(99)
    for _ in range(15):
        h = random_connected_hypergraph(rng, kmax=5, emax=6)
        assert edge_connectivity(h) == edge_connectivity_by_removal(h)


def test_removal_oracle_guard():
    h = hypergraph(3, [{1, 2, 3}] * 13)
    with pytest.raises(TooManyEdgesError):
        edge_connectivity_by_removal(h)


def test_cut_guards():
    with pytest.raises(TooLargeError):
        edge_connectivity(single_full_edge(25))
    with pytest.raises(DisconnectedError):
        edge_connectivity(hypergraph(4, [{1, 2}, {3, 4}]))


def test_min_cut_separating():
    c6 = cycle_hypergraph(6)
    assert min_cut_separating(c6, 1, 4) == 2
    assert min_cut_separating(path_hypergraph(5), 1, 5) == 1
    assert min_cut_separating(cycle_hypergraph(3), 2, 3) == 2
    with pytest.raises(SameVertexError):
        min_cut_separating(c6, 2, 2)


def test_edge_disjoint_paths_path_and_cycle():
    p5 = path_hypergraph(5)
    assert edge_disjoint_paths(p5, 1, 5) == [[0, 1, 2, 3]]
    c6 = cycle_hypergraph(6)
    paths = edge_disjoint_paths(c6, 1, 4)
    assert len(paths) == 2
    assert_valid_path_family(c6, 1, 4, paths)


def test_edge_disjoint_paths_through_hyperedges():
    h = hypergraph(5, [{1, 2, 3}, {3, 4}, {4, 5}, {1, 5}])
    paths = edge_disjoint_paths(h, 1, 4)
    assert len(paths) == min_cut_separating(h, 1, 4) == 2
    assert_valid_path_family(h, 1, 4, paths)
    # vertex 2 only sits inside the big edge, so one path is the max
    assert len(edge_disjoint_paths(h, 2, 4)) == 1


def test_menger_on_random_instances():
    rng = random.Random(7)
    for _ in range(20):
        h = random_connected_hypergraph(rng, kmax=5, emax=6)
        for a in range(1, h.k + 1):
            for b in range(a + 1, h.k + 1):
                paths = edge_disjoint_paths(h, a, b)
                assert len(paths) == min_cut_separating(h, a, b)
                assert_valid_path_family(h, a, b, paths)


def test_line_graph_shapes():
    lp = line_graph(path_hypergraph(4))
    assert lp.n == 3 and lp.edges == frozenset({(0, 1), (1, 2)})
    lt = line_graph(cycle_hypergraph(3))
    assert lt.is_complete() and lt.n == 3
    assert line_graph(single_full_edge(5)).n == 1
    # parallel edges share vertices, hence are adjacent
    lp2 = line_graph(hypergraph(2, [{1, 2}, {1, 2}]))
    assert lp2.edges == frozenset({(0, 1)})


def test_graph_helpers():
    g = graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.adjacent(0, 1) and not g.adjacent(0, 2)
    assert g.neighbors(0) == (1, 3)
    assert graph_is_connected(g)
    assert not graph_is_connected(g, frozenset({0, 2}))
    with pytest.raises(ValueError):
        Graph(2, frozenset({(1, 0)}))


def test_vertex_connectivity():
    assert vertex_connectivity(graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])) == 3
    assert vertex_connectivity(graph(4, [(0, 1), (1, 2), (2, 3)])) == 1
    assert vertex_connectivity(graph(5, [(i, (i + 1) % 5) for i in range(5)])) == 2
    with pytest.raises(TooLargeError):
        vertex_connectivity(Graph(11))
    with pytest.raises(DisconnectedError):
        vertex_connectivity(graph(3, [(0, 1)]))


def test_line_graph_connectivity_dominates_edge_connectivity():
    # removing fewer than lambda(H) edges cannot disconnect, and any vertex
    # cut of L(H) is an edge subset of H whose removal disconnects it
    for _, h in corpus():
        if h.l < 2:
            continue
        assert vertex_connectivity(line_graph(h)) >= edge_connectivity(h)


def test_json_round_trip():
    h = hypergraph(4, [{1, 2, 3}, {3, 4}], [2, 5])
    obj = h.to_json_dict()
    assert obj == {
        "k": 4,
        "edges": [
            {"vertices": [1, 2, 3], "level": 2},
            {"vertices": [3, 4], "level": 5},
        ],
    }
    assert Hypergraph.from_json_dict(obj) == h
    # level defaults to 2 when absent
    bare = Hypergraph.from_json_dict(
        {"k": 2, "edges": [{"vertices": [1, 2]}]}
    )
    assert bare.edges[0].level == 2


def test_builders():
    p = path_hypergraph(4)
    assert p.k == 4 and [sorted(e.vertices) for e in p.edges] == [
        [1, 2],
        [2, 3],
        [3, 4],
    ]
    c = cycle_hypergraph(4)
    assert sorted(c.edges[-1].vertices) == [1, 4]
    assert complete_uniform(4, 2).l == 6
    assert single_full_edge(3, level=7).edges[0].level == 7


def test_incident_and_crossing():
    h = hypergraph(4, [{1, 2}, {2, 3}, {3, 4}, {1, 4}])
    assert h.incident(2) == (0, 1)
    assert h.crossing(frozenset({1, 2})) == (1, 3)
    # singleton edges never cross
    h2 = hypergraph(2, [{1, 2}, {1}])
    assert h2.crossing(frozenset({1})) == (0,)
