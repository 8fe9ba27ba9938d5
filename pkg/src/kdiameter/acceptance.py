"""The repository's acceptance suite as callable criteria.

Each criterion function returns a dict with an "ok" flag plus details and
is exercised both by tests/test_acceptance.py and the repro-all CLI
command.  Randomized criteria take an explicit seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from kdiameter.clustering import (
    exact_cluster,
    gonzalez_cluster,
    jung_bound_holds,
    min_enclosing_ball,
    two_cluster,
)
from kdiameter.coloring import BudgetExceeded, DEFAULT_BUDGET, count_colorings_total
from kdiameter.edgecolor import edge_coloring
from kdiameter.gadgets import (
    build_composite,
    build_gadget_H,
    oriented_embedding_library,
    stitch_embedding,
    stitch_slot_maps,
    verify_gadget,
)
from kdiameter.geometry import IntVector, Pointset
from kdiameter.graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    incidence_hypergraph,
    odd_girth,
    path_graph,
    petersen_graph,
)
from kdiameter.hadamard import (
    five_fourths_embedding,
    hadamard_code,
    hamming_distance,
    linf_embedding,
    verify_embedding,
)
from kdiameter.lp import max_embeddability
from kdiameter.sphere import (
    SEPARATION_THRESHOLD,
    build_region_instance,
    completeness_clustering,
    remark_clustering,
    remark_diameter_within_bound,
    verify_anchor_separation,
)


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def random_regular_graph(n, d, rng, tries=200):
    """Simple d-regular graph via the configuration model with rejection."""
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph(n, edges)
    raise RuntimeError(f"no simple {d}-regular graph on {n} vertices found")


def brute_force_cluster_diameter(pointset, k):
    """Exact optimal k-clustering diameter by pruned partition enumeration."""
    n = len(pointset)
    dist = [[pointset.distance(i, j) if i != j else 0 for j in range(n)]
            for i in range(n)]
    best = [max((dist[i][j] for i in range(n) for j in range(i + 1, n)),
                default=0)]
    assignment = [0] * n

    def rec(i, used, current):
        if current >= best[0] and current > 0:
            if current > best[0]:
                return
        if i == n:
            best[0] = min(best[0], current)
            return
        for c in range(min(used + 1, k)):
            worst = current
            ok = True
            for j in range(i):
                if assignment[j] == c:
                    if dist[i][j] >= best[0] and best[0] > 0:
                        ok = False
                        break
                    worst = max(worst, dist[i][j])
            if not ok or (worst > best[0]):
                continue
            assignment[i] = c
            rec(i + 1, max(used, c + 1), worst)
        return

    rec(0, 0, 0)
    return best[0]


def random_int_pointset(rng, max_points=12, span=10):
    n = rng.randint(3, max_points)
    dim = rng.randint(2, 4)
    pts = [IntVector([rng.randint(-span, span) for _ in range(dim)])
           for _ in range(n)]
    return Pointset("l1_int", pts)


# ---------------------------------------------------------------------------
# criteria


def criterion_1(budget=DEFAULT_BUDGET, seed=0):
    """Hadamard codes: pairwise distance q/2, unique q-partner = complement."""
    checked = 0
    for q in (4, 8, 16, 32, 64):
        code = hadamard_code(q)
        words = code.plus_words
        for i in range(q):
            for j in range(i + 1, q):
                if hamming_distance(words[i], words[j]) != q // 2:
                    return {"ok": False, "q": q, "pair": (i, j)}
                checked += 1
        everything = code.words
        for w in everything:
            partners = [x for x in everything
                        if x != w and hamming_distance(w, x) == q]
            if len(partners) != 1 or partners[0] != w.complement():
                return {"ok": False, "q": q, "word": w.to_string()}
    return {"ok": True, "pairs_checked": checked}


def criterion_2(budget=DEFAULT_BUDGET, seed=0):
    """2-embedding into l_inf for 50 random graphs."""
    rng = random.Random(seed)
    for trial in range(50):
        g = random_graph(rng.randint(2, 12), rng.random(), rng)
        emb = linf_embedding(g)
        report = verify_embedding(emb)
        if not (report["ok"] and emb.short == 1 and emb.long == 2):
            return {"ok": False, "trial": trial, "report": report}
    return {"ok": True, "graphs": 50}


def criterion_3(budget=DEFAULT_BUDGET, seed=0):
    """5/4-embedding of K44 and 20 random 4-edge-colorable 4-regular graphs."""
    rng = random.Random(seed)
    graphs = [complete_bipartite_graph(4, 4)]
    while len(graphs) < 21:
        n = rng.choice((6, 8, 10, 12))
        g = random_regular_graph(n, 4, rng)
        if edge_coloring(g, 4, budget=budget) is not None:
            graphs.append(g)
    for idx, g in enumerate(graphs):
        coloring = edge_coloring(g, 4, budget=budget)
        emb = five_fourths_embedding(g, coloring)
        q = emb.short // 2
        for u in range(g.n):
            for v in range(u + 1, g.n):
                d = emb.distance(u, v)
                if g.has_edge(u, v):
                    if d != 5 * q // 2:
                        return {"ok": False, "graph": idx, "pair": (u, v)}
                elif d > 2 * q:
                    return {"ok": False, "graph": idx, "pair": (u, v)}
    return {"ok": True, "graphs": len(graphs)}


def criterion_4(budget=DEFAULT_BUDGET, seed=0):
    """Gadget: exactly 6 proper 3-colorings, auxiliaries always distinct."""
    gadget = build_gadget_H(budget=budget)
    total = count_colorings_total(gadget.verification_graph(), 3, budget=budget)
    verified = verify_gadget(gadget, budget=budget)
    return {"ok": verified and total == 6, "total_colorings": total,
            "removed_edge": gadget.removed_edge}


def criterion_5(budget=DEFAULT_BUDGET, seed=0):
    """Stitched K4 composite verifies at ratio 3/2; optimal 3-clustering
    diameter on the image equals q."""
    gadget = build_gadget_H(budget=budget)
    library = oriented_embedding_library(gadget, budget=budget)
    J = complete_graph(4)
    comp = build_composite(incidence_hypergraph(J), gadget,
                           slot_maps=stitch_slot_maps(J))
    emb = stitch_embedding(comp, J, library=library, budget=budget)
    report = verify_embedding(emb)
    ratio_ok = report["ok"] and report["achieved_ratio"] == Fraction(3, 2)
    clustering = exact_cluster(Pointset("hamming", emb.image), 3, budget=budget)
    return {"ok": ratio_ok and clustering.diameter == emb.short,
            "q": emb.short, "clustering_diameter": clustering.diameter,
            "ratio": str(report["achieved_ratio"])}


def criterion_6(budget=DEFAULT_BUDGET, seed=0):
    """Anchor separation on the kappa=12 region at threshold 163/125."""
    instance = build_region_instance((0, 1, 2), 12)
    stats = {"nodes": 0}
    try:
        holds, witness = verify_anchor_separation(
            instance, threshold=SEPARATION_THRESHOLD, budget=budget, stats=stats)
    except BudgetExceeded:
        return {"ok": False, "verdict": "budget_exceeded",
                "nodes": stats["nodes"]}
    return {"ok": holds and len(instance.points) == 270,
            "points": len(instance.points), "nodes": stats["nodes"]}


def criterion_7(budget=DEFAULT_BUDGET, seed=0):
    """Explicit family partition of the kappa=12 region has diameter <= 1."""
    instance = build_region_instance((0, 1, 2), 12)
    clustering = completeness_clustering(instance)
    d = clustering.diameter
    within = d == 0 or not d.exceeds(Fraction(1))
    return {"ok": within, "diameter": str(d)}


def criterion_8(budget=DEFAULT_BUDGET, seed=0):
    """Coordinate-rule clustering: squared diameter <= 1 + sqrt(2)/2 and the
    negative b and c axis points land in one cluster."""
    from kdiameter.sphere import axis_key

    instance = build_region_instance((0, 1, 2), 12)
    clustering = remark_clustering(instance)
    bound = remark_diameter_within_bound(clustering, instance)
    eb = instance.index_of[axis_key(1)]
    ec = instance.index_of[axis_key(2)]
    together = clustering.assignment[eb] == clustering.assignment[ec]
    return {"ok": bound and together, "bound_holds": bound,
            "anchors_together": together}


def criterion_9(budget=DEFAULT_BUDGET, seed=0):
    """Max embeddability of the 7-vertex path is exactly 5/3, certified."""
    result = max_embeddability(path_graph(7))
    ok = (not result["unbounded"] and result["ratio"] == Fraction(5, 3)
          and result["certified"])
    return {"ok": ok, "ratio": str(result["ratio"])}


def criterion_10(budget=DEFAULT_BUDGET, seed=0):
    """exact_cluster vs brute force on 100 random pointsets; Gonzalez within
    2x; two_cluster optimal."""
    rng = random.Random(seed)
    for trial in range(100):
        ps = random_int_pointset(rng)
        for k in (2, 3):
            opt = brute_force_cluster_diameter(ps, k)
            got = exact_cluster(ps, k, budget=budget).diameter
            if got != opt:
                return {"ok": False, "trial": trial, "k": k,
                        "expected": opt, "got": got}
            if gonzalez_cluster(ps, k).diameter > 2 * opt:
                return {"ok": False, "trial": trial, "k": k,
                        "reason": "gonzalez above 2x"}
        if two_cluster(ps).diameter != brute_force_cluster_diameter(ps, 2):
            return {"ok": False, "trial": trial, "reason": "two_cluster"}
    return {"ok": True, "pointsets": 100}


def criterion_11(budget=DEFAULT_BUDGET, seed=0):
    """Enclosing-ball radius obeys the dimension-based diameter bound."""
    rng = random.Random(seed)
    for trial in range(100):
        n = rng.randint(2, 8)
        dim = rng.randint(2, 4)
        pts = [tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 5))
                     for _ in range(dim)) for _ in range(n)]
        ball = min_enclosing_ball(pts)
        diam_sq = max((sum((a - b) ** 2 for a, b in zip(p, q))
                       for i, p in enumerate(pts) for q in pts[i + 1:]),
                      default=Fraction(0))
        if not jung_bound_holds(ball, diam_sq, dim):
            return {"ok": False, "trial": trial}
    return {"ok": True, "pointsets": 100}


def criterion_12(budget=DEFAULT_BUDGET, seed=0):
    """Odd girth: C5 and C7 exact, bipartite graphs infinite, Petersen 5."""
    rng = random.Random(seed)
    checks = [odd_girth(cycle_graph(5)) == 5,
              odd_girth(cycle_graph(7)) == 7,
              odd_girth(petersen_graph()) == 5]
    for _ in range(5):
        a, b = rng.randint(1, 5), rng.randint(1, 5)
        g = complete_bipartite_graph(a, b)
        checks.append(odd_girth(g) == float("inf"))
    return {"ok": all(checks), "checks": len(checks)}


CRITERIA = {
    1: ("hadamard code distances", criterion_1),
    2: ("l_inf 2-embedding", criterion_2),
    3: ("5/4 embedding", criterion_3),
    4: ("gadget verification", criterion_4),
    5: ("3/2 embedding end-to-end", criterion_5),
    6: ("anchor separation machine check", criterion_6),
    7: ("region partition completeness", criterion_7),
    8: ("coordinate-rule clustering", criterion_8),
    9: ("LP embeddability of P7", criterion_9),
    10: ("clustering oracles", criterion_10),
    11: ("enclosing-ball diagnostic", criterion_11),
    12: ("odd girth", criterion_12),
}
