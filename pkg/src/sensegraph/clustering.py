"""Chinese Whispers sense clustering of merged temporal graphs.

Randomized label propagation: every node starts in its own cluster and, for
a fixed number of sweeps, adopts the label with the largest summed edge
weight among its neighbours, updating in place. The visit order is
reshuffled every sweep and ties are broken uniformly at random, all from
one seeded generator, so a clustering is fully reproducible from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import kernels
from .builder import TemporalGraph

DEFAULT_ITERATIONS = 15


@dataclass(frozen=True)
class Clustering:
    """Node-word -> cluster-label partition plus the RNG state that made it."""

    assignment: dict[str, int]
    seed: int
    iterations: int

    def clusters(self) -> dict[int, list[str]]:
        grouped: dict[int, list[str]] = {}
        for word in sorted(self.assignment):
            grouped.setdefault(self.assignment[word], []).append(word)
        return grouped

    def to_json(self) -> dict:
        return {"seed": self.seed, "iterations": self.iterations}


def _fresh_seed() -> int:
    return random.getrandbits(32)


def _canonicalize(words: list[str], labels) -> dict[str, int]:
    # cluster 0 is the largest; ties go to the cluster with the smallest word
    members: dict[int, list[str]] = {}
    for word, label in zip(words, labels):
        members.setdefault(int(label), []).append(word)
    ordered = sorted(members.values(), key=lambda ws: (-len(ws), min(ws)))
    return {word: cid for cid, ws in enumerate(ordered) for word in ws}


def chinese_whispers(
    graph: TemporalGraph,
    iterations: int = DEFAULT_ITERATIONS,
    seed: int | None = None,
    backend: str | None = None,
) -> Clustering:
    """Partition a graph into sense clusters.

    Runs exactly ``iterations`` sweeps (no convergence detection). With a
    fixed seed the result is deterministic; labels are canonicalized to
    0..C-1 by descending cluster size.
    """
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    if seed is None:
        seed = _fresh_seed()
    if graph.is_empty:
        return Clustering({}, seed, iterations)

    words = graph.words()
    index = {word: i for i, word in enumerate(words)}
    indptr, indices, weights = kernels.to_csr(
        len(words),
        (
            (index[edge.source], index[edge.target], edge.aggregate_weight)
            for edge in graph.edges.values()
        ),
    )

    impl = kernels.get_backend(backend)
    labels = np.arange(len(words), dtype=np.int64)
    rng = np.random.default_rng(seed)
    for _ in range(iterations):
        order = rng.permutation(len(words)).astype(np.int64)
        uniforms = rng.random(len(words))
        impl.cw_iteration(indptr, indices, weights, labels, order, uniforms)

    return Clustering(_canonicalize(words, labels), seed, iterations)


def recluster(
    graph: TemporalGraph,
    previous: Clustering,
    seed: int | None = None,
    backend: str | None = None,
) -> Clustering:
    """Re-run the clustering to probe for alternative stable partitions.

    A fresh seed is drawn unless one is given; the previous clustering is
    left untouched.
    """
    if seed is None:
        seed = _fresh_seed()
        while seed == previous.seed:
            seed = _fresh_seed()
    return chinese_whispers(graph, previous.iterations, seed, backend)


def apply_clustering(graph: TemporalGraph, clustering: Clustering) -> None:
    """Fill the nodes' cluster_id fields from an assignment."""
    for word, node in graph.nodes.items():
        node.cluster_id = clustering.assignment.get(word)
