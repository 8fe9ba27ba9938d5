"""Vertex- and rainbow-coloring search API on top of the backtracking kernel.

The kernel is the compiled `_colorcore` extension when available, else the
pure-Python `_colorcore_py` module; both expose the same `search` function.
"""

from __future__ import annotations

import os
from itertools import permutations, product
from math import perm

try:
    from kdiameter import _colorcore as _kernel
except ImportError:
    from kdiameter import _colorcore_py as _kernel

KERNEL_BACKEND = _kernel.BACKEND

DEFAULT_BUDGET = int(os.environ.get("KDIAMETER_BUDGET", 10**9))

ENUMERATION_GUARD_NODES = 2**30


class BudgetExceeded(RuntimeError):
    """The node budget ran out before the search concluded either way."""

    def __init__(self, nodes):
        super().__init__(f"search budget exceeded after {nodes} nodes")
        self.nodes = nodes


class EnumerationGuard(ValueError):
    """mode=all refused: the instance is too large to enumerate."""


def find_coloring(graph, k, fixed=None, budget=DEFAULT_BUDGET, stats=None):
    """First proper k-coloring respecting `fixed` (per-vertex color or -1), or None.

    `stats`, when given, is a dict whose "nodes" entry accumulates the
    number of search nodes explored."""
    status, payload, nodes = _kernel.search(
        graph.adjacency_bitsets(), k, fixed=fixed, mode=_kernel.MODE_FIRST,
        budget=budget)
    if stats is not None:
        stats["nodes"] = stats.get("nodes", 0) + nodes
    if status == _kernel.STATUS_BUDGET:
        raise BudgetExceeded(nodes)
    return payload


def enumerate_colorings(graph, k, budget=DEFAULT_BUDGET, guard=True):
    """All proper k-colorings up to color permutation (canonical representatives:
    color classes introduced in first-use order along the search)."""
    if guard and k ** graph.n >= ENUMERATION_GUARD_NODES:
        raise EnumerationGuard(
            f"estimated {k}^{graph.n} search nodes exceeds the enumeration guard")
    status, payload, nodes = _kernel.search(
        graph.adjacency_bitsets(), k, mode=_kernel.MODE_ENUMERATE, budget=budget)
    if status == _kernel.STATUS_BUDGET:
        raise BudgetExceeded(nodes)
    return payload


def count_colorings_total(graph, k, budget=DEFAULT_BUDGET):
    """Exact number of proper k-colorings (not up to symmetry)."""
    total = 0
    for coloring in enumerate_colorings(graph, k, budget=budget):
        used = len(set(coloring))
        total += perm(k, used)
    return total


def expand_coloring(coloring, k):
    """All concrete colorings equivalent to a canonical one under color renaming."""
    used = sorted(set(coloring))
    out = []
    for target in permutations(range(k), len(used)):
        relabel = dict(zip(used, target))
        out.append([relabel[c] for c in coloring])
    return out


def forall_colorings(graph, k, predicate, support=None, budget=DEFAULT_BUDGET,
                     guard=True, stats=None):
    """Check that `predicate` holds for every proper k-coloring.

    Returns (True, None) or (False, counterexample_coloring).  Vacuously true
    when no proper coloring exists.

    With `support` (a vertex list the predicate exclusively depends on), the
    check enumerates support assignments instead of whole colorings: each
    predicate-violating assignment is tested for extendability to a proper
    coloring, caching extendability per color-partition pattern of the
    support (colorings are closed under color renaming, so only the pattern
    matters for extendability).
    """
    if support is None:
        for canonical in enumerate_colorings(graph, k, budget=budget, guard=guard):
            for coloring in expand_coloring(canonical, k):
                if not predicate(coloring):
                    return False, coloring
        return True, None

    support = list(support)
    feasible_cache = {}
    for assignment in product(range(k), repeat=len(support)):
        trial = {v: c for v, c in zip(support, assignment)}
        if predicate(_SupportColoring(trial)):
            continue
        pattern = _partition_pattern(assignment)
        if pattern not in feasible_cache:
            fixed = [-1] * graph.n
            for v, c in zip(support, pattern):
                fixed[v] = c
            feasible_cache[pattern] = find_coloring(graph, k, fixed=fixed,
                                                    budget=budget, stats=stats)
        base = feasible_cache[pattern]
        if base is not None:
            # rename colors so the witness realizes the concrete assignment
            relabel = _pattern_relabel(pattern, assignment, k)
            if relabel is not None:
                return False, [relabel[c] for c in base]
    return True, None


class _SupportColoring:
    """Dict-backed stand-in passed to support predicates: indexable by vertex."""

    def __init__(self, assignment):
        self._assignment = assignment

    def __getitem__(self, v):
        return self._assignment[v]


def _partition_pattern(assignment):
    relabel = {}
    out = []
    for c in assignment:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return tuple(out)


def _pattern_relabel(pattern, assignment, k):
    relabel = {}
    for p, a in zip(pattern, assignment):
        if relabel.setdefault(p, a) != a:
            return None
    remaining = [c for c in range(k) if c not in relabel.values()]
    for c in range(k):
        if c not in relabel:
            relabel[c] = remaining.pop()
    return relabel


def rainbow_k_colorings(hypergraph, k, mode="first", budget=DEFAULT_BUDGET):
    """Rainbow k-coloring search on a hypergraph.

    A rainbow coloring assigns every hyperedge pairwise-distinct colors, so
    the search runs on the constraint graph with one edge per same-hyperedge
    vertex pair.

    mode -- "first": one coloring or None
            "all": all colorings up to color permutation (guarded)
            ("forall", predicate) or ("forall", predicate, support):
              (holds, counterexample) as in `forall_colorings`
    """
    graph = hypergraph.constraint_graph()
    if mode == "first":
        return find_coloring(graph, k, budget=budget)
    if mode == "all":
        return enumerate_colorings(graph, k, budget=budget)
    if isinstance(mode, tuple) and mode and mode[0] == "forall":
        predicate = mode[1]
        support = mode[2] if len(mode) > 2 else None
        return forall_colorings(graph, k, predicate, support=support, budget=budget)
    raise ValueError(f"unknown mode {mode!r}")
