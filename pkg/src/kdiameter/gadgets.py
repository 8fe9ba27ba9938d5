"""Uniquely 3-colorable gadget graphs and their stitched 3/2-embeddings.

The gadget is the Chvatal graph minus one edge together with three auxiliary
vertices attached so that every proper 3-coloring forces the auxiliaries
into three distinct colors.  Composites replace each hyperedge of a
3-uniform 2-regular hypergraph by a gadget copy whose auxiliary roles are
played by the hyperedge's vertices; a rainbow 3-coloring of the hypergraph
then corresponds exactly to a proper 3-coloring of the composite.

Embeddings assign each vertex a pair of Hadamard codewords.  The search
works over abstract signed letters (a letter stands for a codeword, its
negation for the complement), where block distances in units of q/2 are
0 (same letter and sign), 2 (opposite signs of one letter) or 1 (different
letters); an edge needs pair distance >= 3 units and a non-edge <= 2.

Each auxiliary role owns a single letter and maps to the pair
(letter+, letter-).  An orientation entry per role fixes the block position
at which that role's letter may appear among body vertices: the sign
matching the auxiliary's entry at that position is harmless filler, the
opposite sign forces the attachment edge.  Keeping each role letter inside
one block position is what makes disjoint gadget copies stitchable: the two
copies sharing a role use opposite positions for its letter, so no pair of
body vertices can ever disagree by a full codeword complement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from kdiameter.coloring import DEFAULT_BUDGET, BudgetExceeded, enumerate_colorings
from kdiameter.graphs import Graph, chvatal_graph, dfs_orientation, incidence_hypergraph
from kdiameter.hadamard import Embedding, hadamard_code, next_power_of_two

AUX = (12, 13, 14)

ORIENTATIONS = ((1, 2, 2), (2, 1, 2), (2, 2, 1),
                (2, 1, 1), (1, 2, 1), (1, 1, 2))

# role letters are 0, 1, 2; letters >= ROLE_LETTERS are gadget-local fresh
ROLE_LETTERS = 3

# the designated gadget: removing edge (6, 10) leaves the base uniquely
# 3-colorable, and these attachment sets both force distinct auxiliary
# colors and admit oriented embeddings with two fresh letters
DESIGNATED_REMOVED_EDGE = (6, 10)
DESIGNATED_ATTACHMENTS = ((3, 10), (0, 5, 7), (6, 9))


@dataclass
class GadgetH:
    """Chvatal-minus-one-edge base plus per-role auxiliary attachment sets."""

    base: Graph              # 12 vertices
    removed_edge: tuple
    attachments: tuple       # three sorted tuples of base vertices

    def verification_graph(self):
        """The 15-vertex graph: base plus the three attached auxiliaries."""
        edges = set(self.base.edges)
        for role, targets in enumerate(self.attachments):
            for t in targets:
                edges.add((t, AUX[role]))
        return Graph(15, edges)

    def to_dict(self):
        return {"removed_edge": list(self.removed_edge),
                "attachments": [list(t) for t in self.attachments]}

    @classmethod
    def from_dict(cls, d):
        removed = tuple(d["removed_edge"])
        base = chvatal_graph().remove_edge(*removed)
        return cls(base, removed, tuple(tuple(t) for t in d["attachments"]))

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, s):
        return cls.from_dict(json.loads(s))


def gadget_candidates(budget=DEFAULT_BUDGET):
    """Certified gadgets, the designated one first.

    The designated attachment sets are tried before a fallback enumeration
    over single-edge removals that leave the base uniquely 3-colorable,
    attaching each auxiliary to one vertex of each of the other two color
    classes (pairwise disjoint, internally non-adjacent).  Every candidate
    yielded is certified by exhaustive coloring: exactly one proper
    3-coloring up to color permutation, auxiliaries pairwise distinct.
    """
    from itertools import product

    full = chvatal_graph()
    designated = GadgetH(full.remove_edge(*DESIGNATED_REMOVED_EDGE),
                         DESIGNATED_REMOVED_EDGE, DESIGNATED_ATTACHMENTS)
    if verify_gadget(designated, budget=budget):
        yield designated
    for removed in full.sorted_edges():
        base = full.remove_edge(*removed)
        canonical = enumerate_colorings(base, 3, budget=budget)
        if len(canonical) != 1:
            continue
        coloring = canonical[0]
        classes = [sorted(v for v in range(12) if coloring[v] == c)
                   for c in range(3)]
        role_options = []
        for role in range(3):
            a, b = (c for c in range(3) if c != role)
            pairs = [(v, w) for v in classes[a] for w in classes[b]
                     if not base.has_edge(v, w)]
            role_options.append(pairs)
        for combo in product(*role_options):
            flat = [v for pair in combo for v in pair]
            if len(set(flat)) != 6:
                continue
            gadget = GadgetH(base, removed,
                             tuple(tuple(sorted(pair)) for pair in combo))
            if verify_gadget(gadget, budget=budget):
                yield gadget


def build_gadget_H(budget=DEFAULT_BUDGET):
    """First certified gadget candidate."""
    for gadget in gadget_candidates(budget=budget):
        return gadget
    raise RuntimeError("no single-edge removal yields a certifiable gadget")


def build_embeddable_gadget(budget=DEFAULT_BUDGET, max_candidates=20):
    """First certified gadget admitting oriented embeddings.

    Returns (gadget, library); the library holds one embedding per
    orientation the gadget supports directly, which is enough for stitching
    because composite slot maps send each hyperedge's minority-block vertex
    to the last auxiliary slot.
    """
    for count, gadget in enumerate(gadget_candidates(budget=budget)):
        if count >= max_candidates:
            break
        library = oriented_embedding_library(gadget, budget=budget)
        if library:
            return gadget, library
    raise RuntimeError("no candidate gadget admits oriented embeddings")


def verify_gadget(gadget, budget=DEFAULT_BUDGET):
    """Exactly 6 proper 3-colorings, each giving the auxiliaries 3 colors."""
    graph = gadget.verification_graph()
    canonical = enumerate_colorings(graph, 3, budget=budget)
    if len(canonical) != 1:
        return False
    coloring = canonical[0]
    return len({coloring[a] for a in AUX}) == 3


# ---------------------------------------------------------------------------
# oriented embeddings by constraint search


@dataclass
class OrientedGadgetEmbedding:
    gadget: GadgetH
    orientation: tuple
    pairs: list          # 15 entries of (letter1, sign1, letter2, sign2)
    fresh_count: int

    def block_swapped(self):
        """The opposite-orientation embedding: swap the two blocks of every
        vertex, then complement each role letter globally so the auxiliary
        pairs read (letter+, letter-) again."""
        swapped = []
        for l1, s1, l2, s2 in self.pairs:
            a = (l2, -s2 if l2 < ROLE_LETTERS else s2)
            b = (l1, -s1 if l1 < ROLE_LETTERS else s1)
            swapped.append((a[0], a[1], b[0], b[1]))
        flipped = tuple(3 - o for o in self.orientation)
        return OrientedGadgetEmbedding(self.gadget, flipped, swapped,
                                       self.fresh_count)

    def letter_positions_ok(self):
        """Each role letter appears among body pairs only at its oriented
        block position."""
        for v in range(12):
            l1, _, l2, _ = self.pairs[v]
            if l1 < ROLE_LETTERS and self.orientation[l1] != 1:
                return False
            if l2 < ROLE_LETTERS and self.orientation[l2] != 2:
                return False
        return True

    def materialize(self, q=None):
        """Concrete codeword-pair embedding of the 15-vertex graph."""
        letters = ROLE_LETTERS + self.fresh_count
        if q is None:
            q = next_power_of_two(max(2, letters))
        if q < letters:
            raise ValueError(f"q={q} cannot supply {letters} codewords")
        code = hadamard_code(q)

        def word(letter, sign):
            w = code.plus_words[letter]
            return w if sign > 0 else w.complement()

        image = [word(l1, s1).concat(word(l2, s2))
                 for l1, s1, l2, s2 in self.pairs]
        return Embedding(self.gadget.verification_graph(), "hamming", image,
                         short=q, long=3 * q // 2)


def _pair_distance_units(p, r):
    total = 0
    for (la, sa), (lb, sb) in (((p[0], p[1]), (r[0], r[1])),
                               ((p[2], p[3]), (r[2], r[3]))):
        if la == lb:
            total += 0 if sa == sb else 2
        else:
            total += 1
    return total


class EmbeddingSearchError(RuntimeError):
    def __init__(self, message, best_depth):
        super().__init__(f"{message} (best partial depth {best_depth})")
        self.best_depth = best_depth


def find_oriented_embedding(gadget, orientation, max_fresh=6,
                            budget=DEFAULT_BUDGET):
    """Backtracking search for an oriented 3/2-embedding of the gadget.

    Auxiliary role r maps to (letter_r+, letter_r-); body vertices may use
    letter_r (either sign) only at block position orientation[r], plus
    gadget-local fresh letters anywhere.  Fresh letters are introduced in
    canonical order with a positive first occurrence, and the fresh budget
    grows until a solution appears.
    """
    if tuple(orientation) not in ORIENTATIONS:
        raise ValueError(f"orientation {orientation} not in the valid set")
    graph = gadget.verification_graph()
    adjacency = [[graph.has_edge(u, v) for v in range(15)] for u in range(15)]
    pairs = [None] * 15
    for role in range(3):
        pairs[AUX[role]] = (role, 1, role, -1)
    # most-constrained-first static order: body vertices by number of
    # auxiliary neighbors, then degree
    order = sorted(range(12),
                   key=lambda v: (-sum(adjacency[v][a] for a in AUX),
                                  -graph.degree(v), v))
    best_depth = 0
    nodes = 0

    def options(position, fresh_used, fresh_cap):
        out = [(r, s) for r in range(3) if orientation[r] == position
               for s in (1, -1)]
        out += [(ROLE_LETTERS + t, s) for t in range(fresh_used)
                for s in (1, -1)]
        if fresh_used < fresh_cap:
            out.append((ROLE_LETTERS + fresh_used, 1))
        return out

    def consistent(v, pair, assigned):
        for u in assigned:
            d = _pair_distance_units(pair, pairs[u])
            if adjacency[v][u]:
                if d < 3:
                    return False
            elif d > 2:
                return False
        return True

    def rec(idx, fresh_used, assigned, fresh_cap):
        nonlocal best_depth, nodes
        if idx == 12:
            return True
        best_depth = max(best_depth, idx)
        v = order[idx]
        for l1, s1 in options(1, fresh_used, fresh_cap):
            used1 = max(fresh_used,
                        l1 - ROLE_LETTERS + 1 if l1 >= ROLE_LETTERS else 0)
            for l2, s2 in options(2, used1, fresh_cap):
                nodes += 1
                if nodes > budget:
                    raise BudgetExceeded(nodes)
                pair = (l1, s1, l2, s2)
                if not consistent(v, pair, assigned):
                    continue
                used2 = max(used1,
                            l2 - ROLE_LETTERS + 1 if l2 >= ROLE_LETTERS else 0)
                pairs[v] = pair
                assigned.append(v)
                if rec(idx + 1, used2, assigned, fresh_cap):
                    return True
                assigned.pop()
                pairs[v] = None
        return False

    for fresh_cap in range(0, max_fresh + 1):
        assigned = list(AUX)
        if rec(0, 0, assigned, fresh_cap):
            fresh_used = 0
            for p in pairs:
                for letter in (p[0], p[2]):
                    if letter >= ROLE_LETTERS:
                        fresh_used = max(fresh_used, letter - ROLE_LETTERS + 1)
            return OrientedGadgetEmbedding(gadget, tuple(orientation),
                                           list(pairs), fresh_used)
    raise EmbeddingSearchError(
        f"no {tuple(orientation)}-oriented embedding within {max_fresh} "
        "fresh letters", best_depth)


def oriented_embedding_library(gadget, budget=DEFAULT_BUDGET):
    """Embeddings for every orientation the gadget supports directly."""
    library = {}
    for orientation in ORIENTATIONS:
        try:
            library[orientation] = find_oriented_embedding(gadget, orientation,
                                                           budget=budget)
        except EmbeddingSearchError:
            continue
    return library


# ---------------------------------------------------------------------------
# composites and stitching


@dataclass
class CompositeGraph:
    source: object           # 3-uniform 2-regular hypergraph
    gadget: GadgetH
    graph: Graph
    provenance: list         # per vertex: ("original", v) or ("gadget", e_idx, h)
    slot_maps: list          # per hyperedge: vertex owning each auxiliary slot

    def gadget_offset(self, edge_index):
        return self.source.n + 12 * edge_index


def build_composite(hypergraph, gadget, slot_maps=None):
    """One disjoint gadget copy per hyperedge.

    slot_maps assigns each copy's three auxiliary slots to the hyperedge's
    vertices; the default is ascending order.  The rainbow-coloring
    equivalence is slot-order independent, but stitching needs the maps
    produced by stitch_slot_maps.
    """
    if not hypergraph.is_3_uniform() or not hypergraph.is_2_regular():
        raise ValueError("hypergraph must be 3-uniform and 2-regular")
    if slot_maps is None:
        slot_maps = [tuple(e) for e in hypergraph.hyperedges]
    n = hypergraph.n
    edges = set()
    provenance = [("original", v) for v in range(n)]
    for e_idx, e in enumerate(hypergraph.hyperedges):
        if sorted(slot_maps[e_idx]) != list(e):
            raise ValueError(f"slot map {slot_maps[e_idx]} does not cover "
                             f"hyperedge {e}")
        offset = n + 12 * e_idx
        for h in range(12):
            provenance.append(("gadget", e_idx, h))
        for u, v in gadget.base.edges:
            edges.add((offset + u, offset + v))
        for slot, targets in enumerate(gadget.attachments):
            for t in targets:
                edges.add((slot_maps[e_idx][slot], offset + t))
    total = n + 12 * len(hypergraph.hyperedges)
    return CompositeGraph(hypergraph, gadget, Graph(total, edges), provenance,
                          [tuple(m) for m in slot_maps])


def edge_orientations(J):
    """Per-J-vertex block assignment for each incident edge: the DFS tail
    sees block 1, the head block 2.  Bounded in/out degrees guarantee no
    vertex ends up all-1 or all-2 and that an edge's two endpoints disagree."""
    orientation = dfs_orientation(J)
    edge_list = J.sorted_edges()
    sigma = []
    for w in range(J.n):
        entries = {}
        for idx, (u, v) in enumerate(edge_list):
            if w == u or w == v:
                tail = u if (u, v) in orientation.directed else v
                entries[idx] = 1 if w == tail else 2
        sigma.append(entries)
    return sigma


def _minority_index(pattern):
    for idx in range(3):
        if sum(1 for p in pattern if p == pattern[idx]) == 1:
            return idx
    raise ValueError(f"pattern {pattern} has no minority entry")


def stitch_slot_maps(J):
    """Slot maps sending each hyperedge's minority-block vertex to the last
    auxiliary slot, with the majority pair in ascending order first."""
    sigma = edge_orientations(J)
    hypergraph = incidence_hypergraph(J)
    maps = []
    for e_idx, e in enumerate(hypergraph.hyperedges):
        pattern = tuple(sigma[e_idx][v] for v in e)
        m = _minority_index(pattern)
        majority = [v for i, v in enumerate(e) if i != m]
        maps.append((majority[0], majority[1], e[m]))
    return maps


def stitch_embedding(composite, J, library=None, budget=DEFAULT_BUDGET):
    """3/2-embedding of the composite into {0,1}^{2q}.

    Original vertex v takes the pair (w_v, complement(w_v)) of its personal
    codeword; each gadget copy is written in the oriented embedding matching
    its slots' block pattern, with role letters replaced by the owning
    vertices' codewords and fresh letters by copy-local codewords.  q is the
    least power of two covering the letter budget (vertex count plus fresh
    letters per copy).
    """
    hypergraph = composite.source
    if hypergraph.hyperedges != incidence_hypergraph(J).hyperedges:
        raise ValueError("composite source must be the incidence hypergraph of J")
    if library is None:
        library = oriented_embedding_library(composite.gadget, budget=budget)
    sigma = edge_orientations(J)
    n = hypergraph.n
    per_edge = []
    for e_idx in range(len(hypergraph.hyperedges)):
        slots = composite.slot_maps[e_idx]
        pattern = tuple(sigma[e_idx][v] for v in slots)
        if pattern not in library:
            raise ValueError(f"no oriented embedding for slot pattern "
                             f"{pattern}; rebuild the composite with "
                             "stitch_slot_maps")
        per_edge.append(library[pattern])
    fresh_max = max(emb.fresh_count for emb in per_edge)
    total_letters = n + fresh_max * len(per_edge)
    q = next_power_of_two(max(2, total_letters))
    code = hadamard_code(q)

    def word(letter, sign):
        w = code.plus_words[letter]
        return w if sign > 0 else w.complement()

    def global_letter(e_idx, letter):
        if letter < ROLE_LETTERS:
            return composite.slot_maps[e_idx][letter]
        return n + fresh_max * e_idx + (letter - ROLE_LETTERS)

    image = [None] * composite.graph.n
    for v in range(n):
        image[v] = word(v, 1).concat(word(v, -1))
    for e_idx, emb in enumerate(per_edge):
        offset = composite.gadget_offset(e_idx)
        for h in range(12):
            l1, s1, l2, s2 = emb.pairs[h]
            image[offset + h] = word(global_letter(e_idx, l1), s1).concat(
                word(global_letter(e_idx, l2), s2))
    return Embedding(composite.graph, "hamming", image, short=q, long=3 * q // 2)
