"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--nodes N] [--edges M]

Times the two hot loops (label-propagation sweeps and Brandes betweenness)
on the same random graph with both backends and reports the speedup. Also
verifies that the results agree bit for bit.
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from sensegraph import kernels


def random_csr(n_nodes: int, n_edges: int, seed: int = 0):
    rng = random.Random(seed)
    edges = set()
    while len(edges) < n_edges:
        a, b = rng.randrange(n_nodes), rng.randrange(n_nodes)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    weighted = [(a, b, rng.uniform(0.1, 3.0)) for a, b in sorted(edges)]
    return kernels.to_csr(n_nodes, weighted)


def time_cw(backend: str, csr, n: int, iterations: int = 15, seed: int = 42):
    impl = kernels.get_backend(backend)
    indptr, indices, weights = csr
    labels = np.arange(n, dtype=np.int64)
    rng = np.random.default_rng(seed)
    start = time.perf_counter()
    for _ in range(iterations):
        order = rng.permutation(n).astype(np.int64)
        uniforms = rng.random(n)
        impl.cw_iteration(indptr, indices, weights, labels, order, uniforms)
    return time.perf_counter() - start, labels


def time_brandes(backend: str, csr, n: int):
    impl = kernels.get_backend(backend)
    indptr, indices, _ = csr
    start = time.perf_counter()
    raw = impl.brandes(indptr, indices, n)
    return time.perf_counter() - start, raw


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=5000)
    parser.add_argument("--edges", type=int, default=100_000)
    parser.add_argument("--brandes-nodes", type=int, default=800)
    parser.add_argument("--brandes-edges", type=int, default=4000)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "native" not in backends:
        print("compiled kernels not built (pip install -e . && python setup.py build_ext --inplace)")

    print(f"label propagation: {args.nodes} nodes, {args.edges} edges, 15 sweeps")
    csr = random_csr(args.nodes, args.edges)
    times, labels = {}, {}
    for backend in backends:
        times[backend], labels[backend] = time_cw(backend, csr, args.nodes)
        clusters = len(set(labels[backend].tolist()))
        print(f"  {backend:>6}: {times[backend] * 1000:8.1f} ms   ({clusters} clusters)")
    if len(backends) == 2:
        assert (labels["native"] == labels["pure"]).all(), "backend results diverged"
        print(f"  speedup: {times['pure'] / times['native']:.1f}x (bit-identical labels)")

    print(f"betweenness: {args.brandes_nodes} nodes, {args.brandes_edges} edges")
    csr = random_csr(args.brandes_nodes, args.brandes_edges, seed=1)
    raws = {}
    for backend in backends:
        elapsed, raws[backend] = time_brandes(backend, csr, args.brandes_nodes)
        times[backend] = elapsed
        print(f"  {backend:>6}: {elapsed * 1000:8.1f} ms")
    if len(backends) == 2:
        assert (raws["native"] == raws["pure"]).all(), "backend results diverged"
        print(f"  speedup: {times['pure'] / times['native']:.1f}x (bit-identical scores)")


if __name__ == "__main__":
    main()
