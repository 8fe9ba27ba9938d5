import random
from itertools import product

import pytest

from kdiameter import _colorcore_py
from kdiameter.coloring import (
    KERNEL_BACKEND,
    BudgetExceeded,
    EnumerationGuard,
    count_colorings_total,
    enumerate_colorings,
    expand_coloring,
    find_coloring,
    forall_colorings,
    rainbow_k_colorings,
)
from kdiameter.graphs import (
    Graph,
    Hypergraph,
    chvatal_graph,
    complete_graph,
    cycle_graph,
    petersen_graph,
)

try:
    from kdiameter import _colorcore
except ImportError:
    _colorcore = None


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def is_proper(graph, coloring, k):
    return (all(0 <= c < k for c in coloring)
            and all(coloring[u] != coloring[v] for u, v in graph.edges))


def brute_count(graph, k):
    return sum(1 for assignment in product(range(k), repeat=graph.n)
               if is_proper(graph, assignment, k))


def test_chromatic_facts():
    assert find_coloring(cycle_graph(5), 2) is None
    assert is_proper(cycle_graph(5), find_coloring(cycle_graph(5), 3), 3)
    assert is_proper(cycle_graph(6), find_coloring(cycle_graph(6), 2), 2)
    assert find_coloring(complete_graph(4), 3) is None
    assert is_proper(petersen_graph(), find_coloring(petersen_graph(), 3), 3)
    assert find_coloring(chvatal_graph(), 3) is None
    assert is_proper(chvatal_graph(), find_coloring(chvatal_graph(), 4), 4)


def test_fixed_colors_respected():
    g = cycle_graph(4)
    fixed = [2, -1, -1, -1]
    coloring = find_coloring(g, 3, fixed=fixed)
    assert coloring[0] == 2 and is_proper(g, coloring, 3)
    # adjacent vertices pinned to the same color: infeasible
    assert find_coloring(g, 3, fixed=[0, 0, -1, -1]) is None


def test_count_against_brute_force():
    rng = random.Random(4)
    for _ in range(30):
        g = random_graph(rng.randint(1, 6), rng.random(), rng)
        for k in (2, 3):
            assert count_colorings_total(g, k) == brute_count(g, k)


def test_enumerate_canonical_and_expand():
    g = cycle_graph(5)
    canonical = enumerate_colorings(g, 3)
    for coloring in canonical:
        assert is_proper(g, coloring, 3)
        # first-use order: color c appears only after colors < c
        seen = []
        for c in coloring:
            if c not in seen:
                assert c == len(seen)
                seen.append(c)
    concrete = {tuple(x) for can in canonical for x in expand_coloring(can, 3)}
    assert len(concrete) == brute_count(g, 3)
    assert all(is_proper(g, x, 3) for x in concrete)


def test_enumeration_guard():
    with pytest.raises(EnumerationGuard):
        enumerate_colorings(random_graph(40, 0.1, random.Random(0)), 4)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        find_coloring(chvatal_graph(), 4, budget=3)


def test_stats_accumulate_nodes():
    stats = {}
    find_coloring(petersen_graph(), 3, stats=stats)
    assert stats["nodes"] > 0


def test_forall_with_and_without_support_agree():
    rng = random.Random(6)
    for _ in range(20):
        g = random_graph(rng.randint(3, 7), 0.4, rng)
        support = rng.sample(range(g.n), min(3, g.n))

        def predicate(coloring):
            return len({coloring[v] for v in support}) >= 2

        plain = forall_colorings(g, 3, predicate)
        fast = forall_colorings(g, 3, predicate, support=support)
        assert plain[0] == fast[0]
        if not fast[0]:
            witness = fast[1]
            assert is_proper(g, witness, 3) and not predicate(witness)


def test_forall_vacuous_on_uncolorable():
    holds, witness = forall_colorings(complete_graph(4), 3, lambda c: False)
    assert holds and witness is None


def test_rainbow_modes():
    h = Hypergraph(4, [(0, 1, 2), (1, 2, 3)])
    coloring = rainbow_k_colorings(h, 3)
    for e in h.hyperedges:
        assert len({coloring[v] for v in e}) == 3
    everything = rainbow_k_colorings(h, 3, mode="all")
    assert everything and all(len({c[v] for v in e}) == 3
                              for c in everything for e in h.hyperedges)
    holds, _ = rainbow_k_colorings(
        h, 3, mode=("forall", lambda c: c[0] != c[3], [0, 3]))
    assert not holds  # colors of 0 and 3 can coincide across hyperedges
    with pytest.raises(ValueError):
        rainbow_k_colorings(h, 3, mode="bogus")


@pytest.mark.skipif(_colorcore is None, reason="compiled kernel unavailable")
def test_backends_agree():
    assert KERNEL_BACKEND == "cython"
    rng = random.Random(8)
    for _ in range(40):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        adj = g.adjacency_bitsets()
        for k in (2, 3):
            a = _colorcore.search(adj, k, mode=_colorcore.MODE_ENUMERATE)
            b = _colorcore_py.search(adj, k, mode=_colorcore_py.MODE_ENUMERATE)
            assert a == b
