"""Graph and hypergraph structures plus the non-coloring combinatorial tools:
bridges, DFS orientation, odd girth, induced-subgraph tests, file formats."""

from __future__ import annotations

import json
from math import inf


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"endpoint out of range: {(u, v)}")
            norm.add((min(u, v), max(u, v)))
        self.edges = frozenset(norm)
        adj = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = [frozenset(s) for s in adj]

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def max_degree(self):
        return max((self.degree(v) for v in range(self.n)), default=0)

    def is_regular(self, d):
        return all(self.degree(v) == d for v in range(self.n))

    def has_edge(self, u, v):
        return v in self._adj[u]

    def sorted_edges(self):
        return sorted(self.edges)

    def remove_edge(self, u, v):
        e = (min(u, v), max(u, v))
        if e not in self.edges:
            raise ValueError(f"no such edge {e}")
        return Graph(self.n, self.edges - {e})

    def adjacency_bitsets(self):
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return out

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    # -- io -----------------------------------------------------------------

    def to_dict(self):
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_dict(cls, d):
        return cls(d["n"], [tuple(e) for e in d["edges"]])

    @classmethod
    def from_json(cls, s):
        return cls.from_dict(json.loads(s))

    @classmethod
    def from_edge_list_text(cls, text):
        """Plain one-"u v"-per-line, 0-indexed edge list."""
        edges = []
        maxv = -1
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            u, v = (int(t) for t in line.split())
            edges.append((u, v))
            maxv = max(maxv, u, v)
        return cls(maxv + 1, edges)


class Hypergraph:
    __slots__ = ("n", "hyperedges")

    def __init__(self, n, hyperedges):
        self.n = n
        norm = []
        for e in hyperedges:
            e = tuple(sorted(set(e)))
            if len(e) < 2:
                raise ValueError("hyperedges need at least 2 distinct vertices")
            if e[0] < 0 or e[-1] >= n:
                raise ValueError(f"hyperedge out of range: {e}")
            norm.append(e)
        self.hyperedges = tuple(norm)

    def is_3_uniform(self):
        return all(len(e) == 3 for e in self.hyperedges)

    def is_2_regular(self):
        count = [0] * self.n
        for e in self.hyperedges:
            for v in e:
                count[v] += 1
        return all(c == 2 for c in count)

    def constraint_graph(self):
        """Graph with an edge per same-hyperedge vertex pair (rainbow = proper)."""
        edges = set()
        for e in self.hyperedges:
            for i in range(len(e)):
                for j in range(i + 1, len(e)):
                    edges.add((e[i], e[j]))
        return Graph(self.n, edges)

    def to_dict(self):
        return {"n": self.n, "hyperedges": [list(e) for e in self.hyperedges]}

    @classmethod
    def from_dict(cls, d):
        return cls(d["n"], [tuple(e) for e in d["hyperedges"]])

    @classmethod
    def from_json(cls, s):
        return cls.from_dict(json.loads(s))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, m={len(self.hyperedges)})"


def incidence_hypergraph(graph):
    """Hypergraph whose vertices are the graph's edges; one hyperedge per
    graph vertex collecting its incident edges.  Cubic graphs give 3-uniform
    2-regular hypergraphs."""
    edge_index = {e: i for i, e in enumerate(graph.sorted_edges())}
    hyperedges = []
    for v in range(graph.n):
        inc = [edge_index[(min(v, u), max(v, u))] for u in graph.neighbors(v)]
        if len(inc) >= 2:
            hyperedges.append(tuple(sorted(inc)))
    return Hypergraph(len(edge_index), hyperedges)


# ---------------------------------------------------------------------------
# bridges and orientations


def cut_edges(graph):
    """All bridges, by iterative DFS low-link."""
    n = graph.n
    pre = [-1] * n
    low = [0] * n
    bridges = set()
    counter = 0
    for root in range(n):
        if pre[root] != -1:
            continue
        stack = [(root, -1, iter(graph.neighbors(root)))]
        pre[root] = low[root] = counter
        counter += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if pre[w] == -1:
                    pre[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(graph.neighbors(w))))
                    advanced = True
                    break
                elif w != parent:
                    low[v] = min(low[v], pre[w])
                # a simple graph has no parallel edges, so skip the parent once;
                # Graph forbids multi-edges so this is exact
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > pre[p]:
                        bridges.add((min(p, v), max(p, v)))
    return bridges


class Orientation:
    """Directed version of a graph: one ordered pair per edge."""

    __slots__ = ("graph", "directed")

    def __init__(self, graph, directed):
        directed = {(u, v) for u, v in directed}
        undirected = {(min(u, v), max(u, v)) for u, v in directed}
        if undirected != set(graph.edges) or len(directed) != len(graph.edges):
            raise ValueError("orientation must direct each edge exactly once")
        self.graph = graph
        self.directed = frozenset(directed)

    def indegree(self, v):
        return sum(1 for _, h in self.directed if h == v)

    def outdegree(self, v):
        return sum(1 for t, _ in self.directed if t == v)

    def direction(self, u, v):
        """+1 if oriented u->v, -1 if v->u."""
        if (u, v) in self.directed:
            return 1
        if (v, u) in self.directed:
            return -1
        raise ValueError(f"no edge {(u, v)}")


def dfs_orientation(graph):
    """Orient a bridgeless cubic graph along DFS traversal order.

    Every vertex ends with indegree and outdegree in {1, 2}: the first visit
    leaves along an outgoing edge, and the root's bridgeless incident edges
    all close cycles back into it.
    """
    if not graph.is_regular(3):
        raise ValueError("graph must be 3-regular")
    if cut_edges(graph):
        raise ValueError("graph must be bridgeless")
    directed = set()
    seen_edge = set()
    visited = [False] * graph.n
    for root in range(graph.n):
        if visited[root]:
            continue
        stack = [(root, iter(sorted(graph.neighbors(root))))]
        visited[root] = True
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                e = (min(v, w), max(v, w))
                if e in seen_edge:
                    continue
                seen_edge.add(e)
                directed.add((v, w))
                if not visited[w]:
                    visited[w] = True
                    stack.append((w, iter(sorted(graph.neighbors(w)))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
    orientation = Orientation(graph, directed)
    for v in range(graph.n):
        if orientation.indegree(v) == 3 or orientation.outdegree(v) == 3:
            raise AssertionError(f"orientation degree bound violated at {v}")
    return orientation


# ---------------------------------------------------------------------------
# odd girth and induced subgraphs


def odd_girth(graph):
    """Length of the shortest odd cycle via BFS on the bipartite double cover;
    inf iff bipartite."""
    from collections import deque

    best = inf
    for s in range(graph.n):
        dist = {(s, 0): 0}
        queue = deque([(s, 0)])
        while queue:
            v, parity = queue.popleft()
            d = dist[(v, parity)]
            if d * 2 >= best:
                continue
            for w in graph.neighbors(v):
                node = (w, parity ^ 1)
                if node not in dist:
                    dist[node] = d + 1
                    queue.append(node)
        if (s, 1) in dist:
            best = min(best, dist[(s, 1)])
    return best


def is_induced_subgraph_free(graph, pattern):
    """True iff no induced copy of `pattern` occurs in `graph`."""
    if pattern.n > graph.n:
        return True
    order = sorted(range(pattern.n), key=pattern.degree, reverse=True)
    mapping = {}
    used = set()

    def extend(idx):
        if idx == pattern.n:
            return True
        pv = order[idx]
        for gv in range(graph.n):
            if gv in used:
                continue
            ok = True
            for prev in order[:idx]:
                want = pattern.has_edge(pv, prev)
                if graph.has_edge(gv, mapping[prev]) != want:
                    ok = False
                    break
            if ok:
                mapping[pv] = gv
                used.add(gv)
                if extend(idx + 1):
                    return True
                used.discard(gv)
                del mapping[pv]
        return False

    return not extend(0)


# ---------------------------------------------------------------------------
# standard graphs used throughout


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def chvatal_graph():
    """The 12-vertex 4-regular 4-chromatic Chvatal graph."""
    edges = [
        (0, 1), (0, 4), (0, 6), (0, 9), (1, 2), (1, 5), (1, 7), (2, 3),
        (2, 6), (2, 8), (3, 4), (3, 7), (3, 9), (4, 5), (4, 8), (5, 10),
        (5, 11), (6, 10), (6, 11), (7, 8), (7, 11), (8, 10), (9, 10), (9, 11),
    ]
    g = Graph(12, edges)
    assert g.is_regular(4)
    return g
