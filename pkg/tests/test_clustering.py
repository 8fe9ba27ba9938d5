import random
from fractions import Fraction

import pytest

from kdiameter.acceptance import brute_force_cluster_diameter, random_int_pointset
from kdiameter.clustering import (
    barrier_screen,
    distinct_distances,
    exact_cluster,
    gonzalez_cluster,
    jung_bound_holds,
    make_clustering,
    min_enclosing_ball,
    threshold_graph_at,
    two_cluster,
)
from kdiameter.geometry import BitVector, IntVector, Pointset
from kdiameter.hadamard import hadamard_code


def test_make_clustering_validation():
    ps = Pointset("l1_int", [IntVector([0]), IntVector([3])])
    cl = make_clustering(ps, [0, 0], 2)
    assert cl.diameter == 3 and cl.witness_pair == (0, 1)
    assert cl.clusters() == [[0, 1], []]
    with pytest.raises(ValueError):
        make_clustering(ps, [0], 2)
    with pytest.raises(ValueError):
        make_clustering(ps, [0, 2], 2)


def test_threshold_graph_and_distinct_distances():
    pts = [IntVector([0]), IntVector([2]), IntVector([5])]
    ps = Pointset("l1_int", pts)
    # 0 is always a candidate diameter (singleton clusters)
    assert distinct_distances(ps) == [0, 2, 3, 5]
    g = threshold_graph_at(ps, 2)
    assert g.has_edge(0, 2) and g.has_edge(1, 2) and not g.has_edge(0, 1)


def test_exact_cluster_matches_brute_force():
    rng = random.Random(31)
    for _ in range(40):
        ps = random_int_pointset(rng, max_points=9)
        for k in (2, 3, 4):
            got = exact_cluster(ps, k)
            assert got.diameter == brute_force_cluster_diameter(ps, k)
            # the returned assignment actually achieves the reported diameter
            check = make_clustering(ps, got.assignment, k)
            assert check.diameter == got.diameter


def test_exact_cluster_k_range():
    ps = random_int_pointset(random.Random(0))
    with pytest.raises(ValueError):
        exact_cluster(ps, 5)
    with pytest.raises(ValueError):
        exact_cluster(ps, 0)


def test_two_cluster_optimal():
    rng = random.Random(33)
    for _ in range(40):
        ps = random_int_pointset(rng, max_points=10)
        assert two_cluster(ps).diameter == brute_force_cluster_diameter(ps, 2)


def test_gonzalez_within_factor_two():
    rng = random.Random(35)
    for _ in range(40):
        ps = random_int_pointset(rng, max_points=10)
        for k in (2, 3):
            opt = brute_force_cluster_diameter(ps, k)
            assert gonzalez_cluster(ps, k).diameter <= 2 * opt


def test_min_enclosing_ball_known_cases():
    ball = min_enclosing_ball([(Fraction(0), Fraction(0)),
                               (Fraction(2), Fraction(0))])
    assert ball.center == (1, 0) and ball.radius_sq == 1
    # equilateral-ish right triangle: circumball of the hypotenuse
    ball = min_enclosing_ball([(Fraction(0), Fraction(0)),
                               (Fraction(4), Fraction(0)),
                               (Fraction(0), Fraction(3))])
    assert ball.radius_sq == Fraction(25, 4)


def test_min_enclosing_ball_contains_all_points():
    rng = random.Random(37)
    for _ in range(50):
        dim = rng.randint(2, 4)
        pts = [tuple(Fraction(rng.randint(-10, 10)) for _ in range(dim))
               for _ in range(rng.randint(1, 7))]
        ball = min_enclosing_ball(pts)
        for p in pts:
            d = sum((a - c) ** 2 for a, c in zip(p, ball.center))
            assert d <= ball.radius_sq
        # support points lie exactly on the boundary
        assert any(sum((a - c) ** 2 for a, c in zip(p, ball.center))
                   == ball.radius_sq for p in pts)


def test_jung_bound():
    ball = min_enclosing_ball([(Fraction(0), Fraction(0)),
                               (Fraction(1), Fraction(0)),
                               (Fraction(0), Fraction(1))])
    diam_sq = Fraction(2)
    assert jung_bound_holds(ball, diam_sq, 2)


def test_barrier_screen_on_hadamard_pointset():
    code = hadamard_code(8)
    ps = Pointset("hamming", code.words)
    report = barrier_screen(ps, k=3)
    assert report["diameter"] == 8
    assert report["probe_ratio"] == Fraction(3, 2)
    assert report["odd_cycle_obstruction"] == (
        report["odd_girth"] != float("inf"))


def test_cluster_hamming_points():
    words = [BitVector.from_string(s)
             for s in ("0000", "0001", "1110", "1111")]
    ps = Pointset("hamming", words)
    cl = exact_cluster(ps, 2)
    assert cl.diameter == 1
    assert cl.assignment[0] == cl.assignment[1]
    assert cl.assignment[2] == cl.assignment[3]
