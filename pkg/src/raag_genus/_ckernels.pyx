# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_kernels_py``.

Matrix entries stay Python integers (arbitrary precision); the vertex cover
search runs on 64-bit masks and therefore only accepts graphs with at most
64 vertices.
"""

from libc.stdint cimport uint64_t


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def bareiss_rank(list rows, Py_ssize_t ncols):
    cdef list a = [list(r) for r in rows]
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t rank = 0, col, p, i, j
    cdef list piv_row, row
    cdef object prev = 1, piv, f
    for col in range(ncols):
        if rank == m:
            break
        p = rank
        while p < m and (<list>a[p])[col] == 0:
            p += 1
        if p == m:
            continue
        if p != rank:
            a[p], a[rank] = a[rank], a[p]
        piv_row = <list>a[rank]
        piv = piv_row[col]
        for i in range(rank + 1, m):
            row = <list>a[i]
            f = row[col]
            if f == 0:
                for j in range(col + 1, ncols):
                    row[j] = (piv * row[j]) // prev
            else:
                for j in range(col + 1, ncols):
                    row[j] = (piv * row[j] - f * piv_row[j]) // prev
            row[col] = 0
        prev = piv
        rank += 1
    return rank


def bareiss_det(list rows):
    cdef list a = [list(r) for r in rows]
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t k, p, i, j
    cdef int sign = 1
    cdef list piv_row, row
    cdef object prev = 1, piv, f
    if n == 0:
        return 1
    for k in range(n - 1):
        if (<list>a[k])[k] == 0:
            p = k + 1
            while p < n and (<list>a[p])[k] == 0:
                p += 1
            if p == n:
                return 0
            a[p], a[k] = a[k], a[p]
            sign = -sign
        piv_row = <list>a[k]
        piv = piv_row[k]
        for i in range(k + 1, n):
            row = <list>a[i]
            f = row[k]
            for j in range(k + 1, n):
                row[j] = (piv * row[j] - f * piv_row[j]) // prev
            row[k] = 0
        prev = piv
    return sign * (<list>a[n - 1])[n - 1]


cdef struct Search:
    int n
    uint64_t adj[64]
    uint64_t best
    int best_size


cdef uint64_t _greedy_cover(Search* s, uint64_t alive) nogil:
    cdef uint64_t chosen = 0
    cdef int u, d, best_v, best_d
    while True:
        best_v = -1
        best_d = 0
        for u in range(s.n):
            if (alive >> u) & 1:
                d = __builtin_popcountll(s.adj[u] & alive)
                if d > best_d:
                    best_d = d
                    best_v = u
        if best_d == 0:
            return chosen
        chosen |= (<uint64_t>1) << best_v
        alive &= ~((<uint64_t>1) << best_v)


cdef void _rec(Search* s, uint64_t alive, uint64_t chosen, int size) nogil:
    cdef int u, d, v = -1, maxd = 0, twice_edges = 0, edges, lb, msize = 0, k, w
    cdef uint64_t matched = 0, free, nb
    for u in range(s.n):
        if (alive >> u) & 1:
            d = __builtin_popcountll(s.adj[u] & alive)
            twice_edges += d
            if d > maxd:
                maxd = d
                v = u
    if maxd == 0:
        if size < s.best_size:
            s.best = chosen
            s.best_size = size
        return
    edges = twice_edges // 2
    lb = (edges + maxd - 1) // maxd
    for u in range(s.n):
        if (alive >> u) & 1 and not (matched >> u) & 1:
            free = s.adj[u] & alive & ~matched
            if free:
                w = __builtin_ctzll(free)
                matched |= ((<uint64_t>1) << u) | ((<uint64_t>1) << w)
                msize += 1
    if msize > lb:
        lb = msize
    if size + lb >= s.best_size:
        return
    _rec(s, alive & ~((<uint64_t>1) << v), chosen | ((<uint64_t>1) << v), size + 1)
    nb = s.adj[v] & alive
    k = __builtin_popcountll(nb)
    if size + k < s.best_size:
        _rec(s, alive & ~nb & ~((<uint64_t>1) << v), chosen | nb, size + k)


def vertex_cover_mask(int n, adj):
    cdef Search s
    cdef int i
    cdef uint64_t full
    if n > 64:
        raise ValueError("compiled vertex cover supports at most 64 vertices")
    s.n = n
    for i in range(n):
        s.adj[i] = <uint64_t>adj[i]
    full = (~(<uint64_t>0)) if n == 64 else (((<uint64_t>1) << n) - 1)
    with nogil:
        s.best = _greedy_cover(&s, full)
        s.best_size = __builtin_popcountll(s.best)
        _rec(&s, full, 0, 0)
    return int(s.best)
