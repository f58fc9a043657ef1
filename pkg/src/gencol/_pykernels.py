"""Pure-Python reachability kernels (fallback for the compiled ``_kernels``).

Both kernels take a CSR adjacency (``indptr``, ``indices``), a rank array
(smaller rank = earlier in the order) and a radius, and return a CSR triple
``(ptr, members, dist)`` indexed by the BFS source.
"""

from collections import deque

import numpy as np


def weak_bfs(indptr, indices, rank, radius):
    """For each ``u``: every ``v`` with ``dist(u, v) <= radius`` inside ``G[rank >= rank[u]]``.

    Row ``u`` lists exactly the vertices whose weak reach contains ``u``,
    with ``u`` itself first at distance 0.
    """
    indptr = indptr.tolist()
    indices = indices.tolist()
    rank = rank.tolist()
    n = len(rank)
    ptr = [0]
    members = []
    dists = []
    seen = [-1] * n
    dist = [0] * n
    for u in range(n):
        ru = rank[u]
        seen[u] = u
        dist[u] = 0
        members.append(u)
        dists.append(0)
        queue = deque([u])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if dx >= radius:
                continue
            for j in range(indptr[x], indptr[x + 1]):
                y = indices[j]
                if seen[y] != u and rank[y] > ru:
                    seen[y] = u
                    dist[y] = dx + 1
                    members.append(y)
                    dists.append(dx + 1)
                    queue.append(y)
        ptr.append(len(members))
    return (
        np.asarray(ptr, dtype=np.int64),
        np.asarray(members, dtype=np.int64),
        np.asarray(dists, dtype=np.int64),
    )


def strong_bfs(indptr, indices, rank, radius):
    """For each ``v``: every ``u`` ranked below ``v`` reachable by a path of
    length ``<= radius`` whose inner vertices all rank above ``v``.

    ``dist`` holds the shortest such length; ``v`` itself is not listed.
    """
    indptr = indptr.tolist()
    indices = indices.tolist()
    rank = rank.tolist()
    n = len(rank)
    ptr = [0]
    members = []
    dists = []
    seen = [-1] * n
    dist = [0] * n
    for v in range(n):
        rv = rank[v]
        seen[v] = v
        dist[v] = 0
        queue = deque([v])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if dx >= radius:
                continue
            for j in range(indptr[x], indptr[x + 1]):
                y = indices[j]
                if seen[y] == v:
                    continue
                seen[y] = v
                dist[y] = dx + 1
                if rank[y] < rv:
                    members.append(y)
                    dists.append(dx + 1)
                else:
                    queue.append(y)
        ptr.append(len(members))
    return (
        np.asarray(ptr, dtype=np.int64),
        np.asarray(members, dtype=np.int64),
        np.asarray(dists, dtype=np.int64),
    )
