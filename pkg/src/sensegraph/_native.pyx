# Compiled implementations of the graph kernels.
#
# Must stay operation-for-operation in sync with _pure.py: identical
# floating-point evaluation order is what makes results bit-identical
# across backends.

import numpy as np

from libc.stdint cimport int64_t


def cw_iteration(indptr, indices, weights, labels, order, uniforms):
    """One asynchronous label-propagation sweep, updating ``labels`` in place."""
    cdef int64_t[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef int64_t[::1] nbr = np.ascontiguousarray(indices, dtype=np.int64)
    cdef double[::1] wgt = np.ascontiguousarray(weights, dtype=np.float64)
    cdef int64_t[::1] lab = labels
    cdef int64_t[::1] vis = np.ascontiguousarray(order, dtype=np.int64)
    cdef double[::1] uni = np.ascontiguousarray(uniforms, dtype=np.float64)

    cdef Py_ssize_t n = lab.shape[0]
    cdef double[::1] sums = np.zeros(n, dtype=np.float64)
    cdef unsigned char[::1] seen = np.zeros(n, dtype=np.uint8)
    cdef int64_t[::1] touched = np.empty(n, dtype=np.int64)
    cdef int64_t[::1] tied = np.empty(n, dtype=np.int64)

    cdef Py_ssize_t pos, e, t, k
    cdef int64_t u, candidate, choice, tmp
    cdef Py_ssize_t ntouched, ntied, pick
    cdef double best

    for pos in range(n):
        u = vis[pos]
        if ptr[u] == ptr[u + 1]:
            continue
        ntouched = 0
        for e in range(ptr[u], ptr[u + 1]):
            candidate = lab[nbr[e]]
            if seen[candidate]:
                sums[candidate] += wgt[e]
            else:
                seen[candidate] = 1
                sums[candidate] = wgt[e]
                touched[ntouched] = candidate
                ntouched += 1

        best = sums[touched[0]]
        for t in range(1, ntouched):
            if sums[touched[t]] > best:
                best = sums[touched[t]]
        ntied = 0
        for t in range(ntouched):
            if sums[touched[t]] == best:
                tied[ntied] = touched[t]
                ntied += 1
        if ntied == 1:
            choice = tied[0]
        else:
            # insertion sort: tie lists are tiny
            for t in range(1, ntied):
                tmp = tied[t]
                k = t
                while k > 0 and tied[k - 1] > tmp:
                    tied[k] = tied[k - 1]
                    k -= 1
                tied[k] = tmp
            pick = <Py_ssize_t>(uni[pos] * ntied)
            if pick >= ntied:
                pick = ntied - 1
            choice = tied[pick]
        lab[u] = choice

        for t in range(ntouched):
            seen[touched[t]] = 0


def brandes(indptr, indices, n):
    """Raw unweighted betweenness (each unordered pair counted twice)."""
    cdef int64_t[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef int64_t[::1] nbr = np.ascontiguousarray(indices, dtype=np.int64)
    cdef Py_ssize_t nn = n

    bc_arr = np.zeros(nn, dtype=np.float64)
    cdef double[::1] bc = bc_arr
    cdef int64_t[::1] dist = np.empty(nn, dtype=np.int64)
    cdef double[::1] sigma = np.empty(nn, dtype=np.float64)
    cdef double[::1] delta = np.empty(nn, dtype=np.float64)
    cdef int64_t[::1] queue = np.empty(nn, dtype=np.int64)

    cdef Py_ssize_t s, i, e, head, tail
    cdef int64_t v, w, dv, dw

    for s in range(nn):
        for i in range(nn):
            dist[i] = -1
            sigma[i] = 0.0
            delta[i] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        queue[0] = s
        head = 0
        tail = 1
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

        for i in range(tail - 1, -1, -1):
            w = queue[i]
            dw = dist[w]
            for e in range(ptr[w], ptr[w + 1]):
                v = nbr[e]
                if dist[v] == dw - 1:
                    delta[v] += (sigma[v] / sigma[w]) * (1.0 + delta[w])
            if w != s:
                bc[w] += delta[w]

    return bc_arr
