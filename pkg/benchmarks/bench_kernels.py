#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python reference.

Workloads mirror the package's hot paths: st min-vertex-cut flows over a
pair sweep, brute-force minimum-separator search, and minimal-separator
enumeration. Both backends are invoked directly (the dispatcher is
bypassed) and results are asserted equal before timing is reported.

Usage: python benchmarks/bench_kernels.py [--flow-n 210] [--brute-n 20] [--enum-n 60]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from pglab import _pykernels
from pglab.connectivity import components
from pglab.powergraph import build_power_graph_zn_fast, build_reduced_graph

try:
    from pglab import _core
except ImportError:
    _core = None


def _time(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def bench_flow(n: int):
    graph = build_power_graph_zn_fast(n)
    indptr, indices = graph.csr()
    caps = np.ones(graph.vertex_count, dtype=np.int64)
    pairs = []
    for u in range(graph.vertex_count):
        for v in range(u + 1, graph.vertex_count):
            if not graph.adjacent(u, v):
                pairs.append((u, v))
                break
        if len(pairs) >= 40:
            break

    def sweep(module):
        return [
            module.st_vertex_cut(graph.vertex_count, indptr, indices, caps, u, v)
            for u, v in pairs
        ]

    return f"st_vertex_cut sweep on power graph of Z_{n} ({len(pairs)} pairs)", sweep


def bench_brute(n: int):
    graph = build_power_graph_zn_fast(n)
    base = len(components(graph))

    def run(module):
        rows = graph.rows
        if module is not _pykernels:
            rows = np.array(rows, dtype=np.uint64)
        return module.min_sepset_bruteforce(rows, graph.vertex_count, base, graph.vertex_count - 2)

    return f"min_sepset_bruteforce on power graph of Z_{n}", run


def bench_enum(n: int, max_size: int):
    graph = build_reduced_graph(n)
    base = len(components(graph))

    def run(module):
        rows = graph.rows
        if module is not _pykernels:
            rows = np.array(rows, dtype=np.uint64)
        return module.minimal_sepsets_upto(rows, graph.vertex_count, base, max_size)

    return f"minimal_sepsets_upto(max={max_size}) on reduced graph of Z_{n}", run


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--flow-n", type=int, default=210)
    parser.add_argument("--brute-n", type=int, default=20)
    parser.add_argument("--enum-n", type=int, default=60)
    parser.add_argument("--enum-max", type=int, default=3)
    args = parser.parse_args()

    if _core is None:
        print("compiled extension not available; build with `pip install -e .`")
        return 1

    workloads = [
        bench_flow(args.flow_n),
        bench_brute(args.brute_n),
        bench_enum(args.enum_n, args.enum_max),
    ]
    print(f"{'workload':<58} {'compiled':>10} {'pure':>10} {'speedup':>8}")
    for name, run in workloads:
        compiled_result, compiled_t = _time(run, _core)
        pure_result, pure_t = _time(run, _pykernels)
        assert compiled_result == pure_result, f"backend mismatch in {name}"
        print(f"{name:<58} {compiled_t:>9.3f}s {pure_t:>9.3f}s {pure_t / compiled_t:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
