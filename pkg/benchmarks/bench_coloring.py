"""Benchmark the compiled coloring kernel against the pure-Python fallback.

Runs the same searches through both backends and reports wall-clock times
and speedups.  Usage: python benchmarks/bench_coloring.py [--repeat N]
"""

import argparse
import random
import statistics
import time

from kdiameter import _colorcore_py

try:
    from kdiameter import _colorcore
except ImportError:
    _colorcore = None

from kdiameter.graphs import Graph, chvatal_graph


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def cases():
    rng = random.Random(7)
    yield "chvatal k=3 enumerate", chvatal_graph(), 3, _colorcore_py.MODE_ENUMERATE
    yield "chvatal k=4 enumerate", chvatal_graph(), 4, _colorcore_py.MODE_ENUMERATE
    for n, p, k in ((30, 0.5, 4), (40, 0.4, 4), (45, 0.5, 5)):
        g = random_graph(n, p, rng)
        yield f"random n={n} p={p} k={k} first", g, k, _colorcore_py.MODE_FIRST
    g = random_graph(22, 0.6, rng)
    yield "random n=22 p=0.6 k=4 enumerate", g, 4, _colorcore_py.MODE_ENUMERATE


def run(kernel, graph, k, mode, repeat):
    adj = graph.adjacency_bitsets()
    times = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = kernel.search(adj, k, mode=mode)
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _colorcore is None:
        print("compiled kernel unavailable; benchmarking fallback only")
    header = f"{'case':36} {'python':>10} {'cython':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    speedups = []
    for name, graph, k, mode in cases():
        t_py, r_py = run(_colorcore_py, graph, k, mode, args.repeat)
        if _colorcore is None:
            print(f"{name:36} {t_py:9.4f}s {'-':>10} {'-':>8}")
            continue
        t_cy, r_cy = run(_colorcore, graph, k, mode, args.repeat)
        assert r_py == r_cy, f"backend disagreement on {name}"
        speedups.append(t_py / t_cy)
        print(f"{name:36} {t_py:9.4f}s {t_cy:9.4f}s {t_py / t_cy:7.1f}x")
    if speedups:
        print(f"\ngeometric mean speedup: "
              f"{statistics.geometric_mean(speedups):.1f}x")


if __name__ == "__main__":
    main()
