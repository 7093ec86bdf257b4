"""Pure-Python implementations of the hot kernels.

These are the reference versions; ``_ckernels.pyx`` mirrors them line for line
so that both backends return identical results, including tie-breaks.
"""

from __future__ import annotations


def bareiss_rank(rows: list[list[int]], ncols: int) -> int:
    a = [list(r) for r in rows]
    m = len(a)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == m:
            break
        p = rank
        while p < m and a[p][col] == 0:
            p += 1
        if p == m:
            continue
        if p != rank:
            a[p], a[rank] = a[rank], a[p]
        piv_row = a[rank]
        piv = piv_row[col]
        for i in range(rank + 1, m):
            row = a[i]
            f = row[col]
            for j in range(col + 1, ncols):
                row[j] = (piv * row[j] - f * piv_row[j]) // prev
            row[col] = 0
        prev = piv
        rank += 1
    return rank


def bareiss_det(rows: list[list[int]]) -> int:
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = k + 1
            while p < n and a[p][k] == 0:
                p += 1
            if p == n:
                return 0
            a[p], a[k] = a[k], a[p]
            sign = -sign
        piv_row = a[k]
        piv = piv_row[k]
        for i in range(k + 1, n):
            row = a[i]
            f = row[k]
            for j in range(k + 1, n):
                row[j] = (piv * row[j] - f * piv_row[j]) // prev
            row[k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _greedy_cover(n: int, adj: list[int], alive: int) -> int:
    chosen = 0
    while True:
        best_v = -1
        best_d = 0
        for u in range(n):
            if (alive >> u) & 1:
                d = _popcount(adj[u] & alive)
                if d > best_d:
                    best_d = d
                    best_v = u
        if best_d == 0:
            return chosen
        chosen |= 1 << best_v
        alive &= ~(1 << best_v)


def vertex_cover_mask(n: int, adj: list[int]) -> int:
    """Minimum vertex cover of a graph given by adjacency bitmasks.

    Branch and bound: branch on a maximum-degree vertex (lowest index on
    ties), first taking the vertex itself, then its whole neighbourhood.
    The greedy cover seeds the incumbent; only strict improvements replace it.
    """
    full = (1 << n) - 1
    best = _greedy_cover(n, adj, full)
    best_size = _popcount(best)

    def rec(alive: int, chosen: int, size: int) -> None:
        nonlocal best, best_size
        v = -1
        maxd = 0
        twice_edges = 0
        for u in range(n):
            if (alive >> u) & 1:
                d = _popcount(adj[u] & alive)
                twice_edges += d
                if d > maxd:
                    maxd = d
                    v = u
        if maxd == 0:
            if size < best_size:
                best = chosen
                best_size = size
            return
        edges = twice_edges // 2
        lb = (edges + maxd - 1) // maxd
        # greedy maximal matching is a second lower bound
        matched = 0
        msize = 0
        for u in range(n):
            if (alive >> u) & 1 and not (matched >> u) & 1:
                free = adj[u] & alive & ~matched
                if free:
                    w = (free & -free).bit_length() - 1
                    matched |= (1 << u) | (1 << w)
                    msize += 1
        if msize > lb:
            lb = msize
        if size + lb >= best_size:
            return
        rec(alive & ~(1 << v), chosen | (1 << v), size + 1)
        nb = adj[v] & alive
        k = _popcount(nb)
        if size + k < best_size:
            rec(alive & ~nb & ~(1 << v), chosen | nb, size + k)

    rec(full, 0, 0)
    return best
