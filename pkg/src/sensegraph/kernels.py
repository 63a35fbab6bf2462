"""Backend selection for the hot graph kernels.

Two interchangeable implementations exist: a compiled extension
(``sensegraph._native``, built from Cython) and a pure-Python fallback
(``sensegraph._pure``). Both evaluate floating-point expressions in the
same order, so label-propagation sweeps and betweenness scores are
bit-identical across backends. The compiled one is picked automatically
when present; set ``SENSEGRAPH_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
from typing import Iterable

import numpy as np

from . import _pure

try:
    from . import _native
except ImportError:  # extension not built
    _native = None


def available_backends() -> list[str]:
    names = ["pure"]
    if _native is not None:
        names.insert(0, "native")
    return names


def get_backend(name: str | None = None):
    """Resolve a kernel module by name; None picks the default."""
    if name is None:
        if os.environ.get("SENSEGRAPH_PURE"):
            name = "pure"
        else:
            name = "native" if _native is not None else "pure"
    if name == "native":
        if _native is None:
            raise RuntimeError("compiled kernels are not available; rebuild with Cython")
        return _native
    if name == "pure":
        return _pure
    raise ValueError(f"unknown kernel backend {name!r}")


def backend_name(name: str | None = None) -> str:
    return "native" if get_backend(name) is _native and _native is not None else "pure"


def to_csr(
    n_nodes: int, edges: Iterable[tuple[int, int, float]]
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Undirected edge list -> CSR adjacency (both directions stored).

    Neighbour lists are sorted by node index, which fixes the visit order
    the kernels rely on for reproducibility.
    """
    adjacency: list[list[tuple[int, float]]] = [[] for _ in range(n_nodes)]
    for i, j, w in edges:
        adjacency[i].append((j, w))
        adjacency[j].append((i, w))

    indptr = np.zeros(n_nodes + 1, dtype=np.int64)
    indices = []
    weights = []
    for i, nbrs in enumerate(adjacency):
        nbrs.sort()
        indptr[i + 1] = indptr[i] + len(nbrs)
        for j, w in nbrs:
            indices.append(j)
            weights.append(w)
    return (
        indptr,
        np.asarray(indices, dtype=np.int64),
        np.asarray(weights, dtype=np.float64),
    )
