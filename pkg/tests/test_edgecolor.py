import random

import pytest

from kdiameter.edgecolor import (
    edge_coloring,
    line_graph,
    matching_decomposition,
    three_edge_color_via_bridge_splitting,
)
from kdiameter.graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    petersen_graph,
)


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def assert_proper_edge_coloring(graph, coloring, c):
    for v in range(graph.n):
        incident = [coloring.color_of(v, u) for u in graph.neighbors(v)]
        assert len(set(incident)) == len(incident)
        assert all(0 <= x < c for x in incident)


def test_line_graph_small():
    lg, edges = line_graph(cycle_graph(4))
    assert lg.n == 4
    assert edges == cycle_graph(4).sorted_edges()
    assert all(lg.degree(v) == 2 for v in range(4))


def test_edge_coloring_delta_plus_one_always_succeeds():
    rng = random.Random(13)
    for _ in range(60):
        g = random_graph(rng.randint(2, 12), rng.random(), rng)
        c = g.max_degree() + 1
        coloring = edge_coloring(g, c)
        assert coloring is not None
        assert_proper_edge_coloring(g, coloring, c)


def test_edge_coloring_exact_class_one_cases():
    for g, c in ((complete_bipartite_graph(4, 4), 4),
                 (cycle_graph(6), 2), (complete_graph(4), 3)):
        coloring = edge_coloring(g, c)
        assert coloring is not None
        assert_proper_edge_coloring(g, coloring, c)


def test_edge_coloring_infeasible():
    # odd cycles need 3 edge colors
    assert edge_coloring(cycle_graph(5), 2) is None
    # Petersen needs 4
    assert edge_coloring(petersen_graph(), 3) is None


def test_matching_decomposition():
    g = complete_bipartite_graph(3, 3)
    coloring = edge_coloring(g, 3)
    matchings = matching_decomposition(g, coloring)
    assert len(matchings) == 3
    covered = {e for m in matchings for e in m}
    assert covered == set(g.sorted_edges())
    for m in matchings:
        touched = [v for e in m for v in e]
        assert len(set(touched)) == len(touched)


def test_bridge_splitting_on_bridged_cubic_graph():
    # two K4-minus-edge blocks joined by a bridge: cubic with one cut edge
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3),
             (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (0, 4)]
    g = Graph(8, edges + [(3, 7)])
    coloring = three_edge_color_via_bridge_splitting(g)
    assert coloring is not None
    assert_proper_edge_coloring(g, coloring, 3)


def test_bridge_splitting_matches_direct_search():
    rng = random.Random(21)
    tried = 0
    while tried < 15:
        g = random_graph(rng.randint(4, 9), 0.4, rng)
        if g.max_degree() > 3:
            continue
        tried += 1
        split = three_edge_color_via_bridge_splitting(g)
        direct = edge_coloring(g, 3)
        assert (split is None) == (direct is None)
        if split is not None:
            assert_proper_edge_coloring(g, split, 3)


def test_bridge_splitting_refuses_high_degree():
    with pytest.raises(ValueError):
        three_edge_color_via_bridge_splitting(complete_graph(5))


def test_petersen_not_three_edge_colorable_via_splitting():
    assert three_edge_color_via_bridge_splitting(petersen_graph()) is None
