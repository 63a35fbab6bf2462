"""Pure-Python implementations of the graph kernels.

Reference semantics for the compiled extension: every floating-point
operation here happens in the same order as in ``_native.pyx``, so the two
backends return bit-identical results. Keep the loops in sync when editing
either file.
"""

from __future__ import annotations

import numpy as np


def cw_iteration(indptr, indices, weights, labels, order, uniforms) -> None:
    """One asynchronous label-propagation sweep, updating ``labels`` in place.

    Nodes are visited in ``order``; each adopts the incident label with the
    largest summed edge weight. Ties are broken with the pre-drawn uniform
    for the visit, indexing into the tied labels sorted ascending.
    """
    n = len(labels)
    ptr = indptr.tolist()
    nbr = indices.tolist()
    wgt = weights.tolist()
    lab = labels.tolist()
    vis = order.tolist()
    uni = uniforms.tolist()

    sums = [0.0] * n
    seen = [False] * n

    for pos in range(n):
        u = vis[pos]
        start, end = ptr[u], ptr[u + 1]
        if start == end:
            continue
        touched = []
        for e in range(start, end):
            candidate = lab[nbr[e]]
            if seen[candidate]:
                sums[candidate] += wgt[e]
            else:
                seen[candidate] = True
                sums[candidate] = wgt[e]
                touched.append(candidate)

        best = sums[touched[0]]
        for candidate in touched[1:]:
            if sums[candidate] > best:
                best = sums[candidate]
        tied = [candidate for candidate in touched if sums[candidate] == best]
        if len(tied) == 1:
            choice = tied[0]
        else:
            tied.sort()
            pick = int(uni[pos] * len(tied))
            if pick >= len(tied):
                pick = len(tied) - 1
            choice = tied[pick]
        lab[u] = choice

        for candidate in touched:
            seen[candidate] = False

    labels[:] = lab


def brandes(indptr, indices, n: int) -> np.ndarray:
    """Raw unweighted betweenness (each unordered pair counted twice)."""
    ptr = indptr.tolist()
    nbr = indices.tolist()

    bc = [0.0] * n
    dist = [0] * n
    sigma = [0.0] * n
    delta = [0.0] * n
    queue = [0] * n

    for s in range(n):
        for i in range(n):
            dist[i] = -1
            sigma[i] = 0.0
            delta[i] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            v = queue[head]
            head += 1
            dv = dist[v]
            for e in range(ptr[v], ptr[v + 1]):
                w = nbr[e]
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue[tail] = w
                    tail += 1
                if dist[w] == dv + 1:
                    sigma[w] += sigma[v]

        # queue doubles as the BFS stack; walk it backwards to accumulate
        for i in range(tail - 1, -1, -1):
            w = queue[i]
            dw = dist[w]
            for e in range(ptr[w], ptr[w + 1]):
                v = nbr[e]
                if dist[v] == dw - 1:
                    delta[v] += (sigma[v] / sigma[w]) * (1.0 + delta[w])
            if w != s:
                bc[w] += delta[w]

    return np.asarray(bc, dtype=np.float64)
