import random

import numpy as np
import pytest

from sensegraph import kernels


def random_csr(n, m, seed):
    rng = random.Random(seed)
    edges = set()
    while len(edges) < m:
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    weighted = [(a, b, rng.uniform(0.1, 3.0)) for a, b in sorted(edges)]
    return kernels.to_csr(n, weighted)


class TestCsr:
    def test_adjacency_sorted_and_symmetric(self):
        indptr, indices, weights = kernels.to_csr(3, [(0, 2, 1.5), (0, 1, 2.0)])
        assert indptr.tolist() == [0, 2, 3, 4]
        assert indices.tolist() == [1, 2, 0, 0]
        assert weights.tolist() == [2.0, 1.5, 2.0, 1.5]

    def test_isolated_nodes_have_empty_rows(self):
        indptr, indices, _ = kernels.to_csr(4, [(1, 2, 1.0)])
        assert indptr.tolist() == [0, 0, 1, 2, 2]


class TestBackendSelection:
    def test_pure_always_available(self):
        assert "pure" in kernels.available_backends()
        assert kernels.get_backend("pure").__name__.endswith("_pure")

    def test_env_override_forces_pure(self, monkeypatch):
        monkeypatch.setenv("SENSEGRAPH_PURE", "1")
        assert kernels.backend_name() == "pure"

    def test_unknown_backend_rejected(self):
        with pytest.raises(ValueError):
            kernels.get_backend("gpu")


@pytest.mark.skipif("native" not in kernels.available_backends(), reason="extension not built")
class TestBackendParity:
    def test_cw_sweeps_bit_identical(self):
        indptr, indices, weights = random_csr(150, 600, seed=3)
        results = {}
        for backend in ("native", "pure"):
            impl = kernels.get_backend(backend)
            labels = np.arange(150, dtype=np.int64)
            rng = np.random.default_rng(17)
            for _ in range(15):
                order = rng.permutation(150).astype(np.int64)
                uniforms = rng.random(150)
                impl.cw_iteration(indptr, indices, weights, labels, order, uniforms)
            results[backend] = labels.copy()
        assert (results["native"] == results["pure"]).all()

    def test_brandes_bit_identical(self):
        indptr, indices, _ = random_csr(80, 300, seed=5)
        native = kernels.get_backend("native").brandes(indptr, indices, 80)
        pure = kernels.get_backend("pure").brandes(indptr, indices, 80)
        assert (native == pure).all()
