"""Cut-pair detection on simple graphs.

``no_cut_pair`` answers whether deleting any two vertices leaves the graph
connected.  For every vertex ``x`` it runs an iterative lowpoint search on
``G - x`` and fails as soon as ``G - x`` is disconnected or has a cut
vertex.  The inner loop is compiled with numba.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from numba import njit


@njit(cache=True)
def _scan(indptr, indices, n):
    disc = np.empty(n, np.int64)
    low = np.empty(n, np.int64)
    parent = np.empty(n, np.int64)
    it = np.empty(n, np.int64)
    stack = np.empty(n, np.int64)
    for x in range(n):
        for v in range(n):
            disc[v] = -1
        root = 0 if x != 0 else 1
        if root >= n:
            continue
        t = 0
        disc[root] = t
        low[root] = t
        t += 1
        parent[root] = -1
        it[root] = indptr[root]
        top = 0
        stack[0] = root
        root_children = 0
        while top >= 0:
            v = stack[top]
            if it[v] < indptr[v + 1]:
                u = indices[it[v]]
                it[v] += 1
                if u == x or u == parent[v]:
                    continue
                if disc[u] == -1:
                    disc[u] = t
                    low[u] = t
                    t += 1
                    parent[u] = v
                    it[u] = indptr[u]
                    top += 1
                    stack[top] = u
                    if v == root:
                        root_children += 1
                elif disc[u] < low[v]:
                    low[v] = disc[u]
            else:
                top -= 1
                p = parent[v]
                if p >= 0:
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if p != root and low[v] >= disc[p]:
                        return False
        if t != n - 1:
            return False
        if root_children > 1:
            return False
    return True


def no_cut_pair(adj: Sequence[Sequence[int]]) -> bool:
    """True iff no set of at most two vertices disconnects the graph.

    Args:
        adj: Neighbour lists of a simple graph on ``0..n-1``.
    """
    n = len(adj)
    indptr = np.zeros(n + 1, np.int64)
    for v, nb in enumerate(adj):
        indptr[v + 1] = indptr[v] + len(nb)
    indices = np.fromiter((u for nb in adj for u in nb), np.int64, int(indptr[-1]))
    return bool(_scan(indptr, indices, n))
