"""Maximum Hamming embeddability ratio via an exact rational LP.

A binary embedding of a graph is a multiset of cut words w in {0,1}^n; the
distance between vertices a, b is the total weight of words with w_a != w_b.
Maximizing the ratio r with non-edge distances normalized to 1 is the linear
program: maximize r subject to edge cut sums >= r, non-edge cut sums <= 1,
x_w >= 0.  Solved with a dense simplex over Fractions and Bland's rule, so
the optimum is exact and the witness is rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from kdiameter.geometry import BitVector
from kdiameter.hadamard import Embedding

MAX_VERTICES = 16


@dataclass
class EmbeddabilityLP:
    graph: object
    words: list        # canonical cut masks: bit0 = 0, not all-zero
    edge_pairs: list
    nonedge_pairs: list


@dataclass
class LPResult:
    status: str        # "optimal" | "unbounded"
    ratio: object      # Fraction when optimal
    weights: dict      # word mask -> positive Fraction


def build_embeddability_lp(graph, max_n=MAX_VERTICES):
    """LP instance over canonical cut variables.

    A word and its complement induce the same cut, so only words with first
    bit 0 are kept; the all-zeros word cuts nothing and is dropped.
    """
    if graph.n > max_n:
        raise ValueError(f"vertex count {graph.n} exceeds the cap {max_n}")
    if graph.n < 1:
        raise ValueError("graph must have at least one vertex")
    words = [w for w in range(1, 1 << graph.n) if not (w & 1)]
    if graph.n == 1:
        words = []
    edge_pairs = graph.sorted_edges()
    nonedge_pairs = [(a, b) for a in range(graph.n) for b in range(a + 1, graph.n)
                     if not graph.has_edge(a, b)]
    return EmbeddabilityLP(graph, words, edge_pairs, nonedge_pairs)


def _cuts(word, a, b):
    return ((word >> a) ^ (word >> b)) & 1


def solve_lp(lp):
    """Exact simplex solve; maximize r.

    Always feasible (x = 0, r = 0).  Unbounded exactly when the edge
    constraints can be scaled freely, e.g. graphs with no non-edges or no
    edges at all.
    """
    # columns: 0 = r, then one per word; rows: edges (r - cut sum <= 0),
    # then non-edges (cut sum <= 1)
    num_vars = 1 + len(lp.words)
    rows = []
    rhs = []
    for a, b in lp.edge_pairs:
        row = [Fraction(1)] + [Fraction(-_cuts(w, a, b)) for w in lp.words]
        rows.append(row)
        rhs.append(Fraction(0))
    for a, b in lp.nonedge_pairs:
        row = [Fraction(0)] + [Fraction(_cuts(w, a, b)) for w in lp.words]
        rows.append(row)
        rhs.append(Fraction(1))
    objective = [Fraction(1)] + [Fraction(0)] * len(lp.words)
    status, value, solution = simplex_max(rows, rhs, objective)
    if status == "unbounded":
        return LPResult("unbounded", None, {})
    weights = {w: solution[1 + i] for i, w in enumerate(lp.words) if solution[1 + i]}
    return LPResult("optimal", value, weights)


def simplex_max(rows, rhs, objective):
    """Maximize objective . x subject to rows . x <= rhs, x >= 0, rhs >= 0.

    Dense tableau simplex with Bland's anti-cycling rule over Fractions.
    Returns ("optimal", value, x) or ("unbounded", None, None).
    """
    m = len(rows)
    n = len(objective)
    if any(b < 0 for b in rhs):
        raise ValueError("rhs must be nonnegative (slack basis start)")
    # tableau: m constraint rows of [A | I | b], then the objective row
    tab = [list(rows[i]) + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]]
           for i in range(m)]
    obj = [-c for c in objective] + [Fraction(0)] * (m + 1)
    basis = [n + i for i in range(m)]
    width = n + m

    while True:
        enter = -1
        for j in range(width):
            if obj[j] < 0:
                enter = j
                break
        if enter == -1:
            break
        leave, best = -1, None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][width] / a
                if best is None or ratio < best or (ratio == best
                                                   and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave == -1:
            return "unbounded", None, None
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, tab[leave])]
        basis[leave] = enter

    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[i][width]
    return "optimal", obj[width], x


def extract_integer_embedding(graph, result):
    """Materialize the LP witness as a binary embedding.

    Weights are scaled by the LCM of their denominators; each word becomes
    that many coordinate columns, and vertex v reads its bits across all
    columns.  Distances are then the scaled cut sums, so the embedding
    verifies at the LP ratio with short = scale and long = ratio * scale.
    """
    if result.status != "optimal":
        raise ValueError("no bounded witness to extract")
    if not result.weights or result.ratio <= 0:
        raise ValueError("degenerate all-zero witness; nothing to embed")
    scale = lcm(*(w.denominator for w in result.weights.values()))
    columns = []
    for word in sorted(result.weights):
        count = result.weights[word] * scale
        columns.extend([word] * int(count))
    image = []
    for v in range(graph.n):
        image.append(BitVector.from_bits([(w >> v) & 1 for w in columns]))
    return Embedding(graph, "hamming", image,
                     short=scale, long=result.ratio * scale)


def max_embeddability(graph):
    """Largest r for which the graph embeds into binary Hamming space.

    Returns {"unbounded": bool, "ratio": Fraction | None,
             "certified": bool, "embedding": Embedding | None}.
    """
    lp = build_embeddability_lp(graph)
    result = solve_lp(lp)
    if result.status == "unbounded":
        return {"unbounded": True, "ratio": None, "certified": True,
                "embedding": None}
    if not result.weights or result.ratio <= 0:
        return {"unbounded": False, "ratio": result.ratio, "certified": True,
                "embedding": None}
    embedding = extract_integer_embedding(graph, result)
    from kdiameter.hadamard import verify_embedding

    report = verify_embedding(embedding)
    certified = report["ok"] and report["achieved_ratio"] == result.ratio
    return {"unbounded": False, "ratio": result.ratio, "certified": certified,
            "embedding": embedding}
