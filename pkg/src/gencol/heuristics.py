"""Constructive vertex orders that certify upper bounds on the colouring numbers."""

from __future__ import annotations

import heapq

from gencol.errors import InputError
from gencol.graph import Graph
from gencol.reach import LinearOrder, path_packing


def peel(g: Graph) -> tuple[list[int], int]:
    """Repeated minimum-degree removal (ties by vertex id).

    Returns the removal sequence and the largest degree seen at removal time.
    """
    deg = g.degrees()
    alive = [True] * g.n
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    seq = []
    worst = 0
    while heap:
        d, v = heapq.heappop(heap)
        if not alive[v] or d != deg[v]:
            continue
        alive[v] = False
        seq.append(v)
        worst = max(worst, d)
        for u in g.adj[v]:
            if alive[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return seq, worst


def degeneracy_order(g: Graph) -> LinearOrder:
    """Min-degree peeling order; the first vertex peeled gets the largest rank,
    so every vertex has at most ``degeneracy`` smaller neighbours."""
    seq, _ = peel(g)
    return LinearOrder.from_sequence(reversed(seq))


def b_r(g: Graph, S, v: int, r: int) -> int:
    """Paths of length ``<= r`` from ``v`` to ``S`` with inner vertices outside ``S``,
    pairwise meeting only in ``v``; the trivial path counts."""
    S = set(S)
    v = g.check_vertex(v)
    if v not in S:
        raise InputError(f"vertex {v} is not in S")
    outside = [u for u in range(g.n) if u not in S]
    return 1 + path_packing(g, v, S, outside, r)


def greedy_adm_order(g: Graph, r: int, trace: list | None = None) -> LinearOrder:
    """Build an order from the top down, each time placing the vertex of the
    remaining set ``S`` that minimises ``b_r(S, v)`` (ties by id).

    The admissibility of the result equals the largest ``b_r`` value chosen.
    When ``trace`` is a list, the chosen ``(vertex, b_r)`` pairs are appended.
    """
    if r < 1:
        raise InputError("greedy admissibility order needs r >= 1")
    remaining = set(range(g.n))
    top_down = []
    while remaining:
        best = None
        for v in sorted(remaining):
            val = b_r(g, remaining, v, r)
            if best is None or val < best[0]:
                best = (val, v)
                if val == 1:
                    break
        val, v = best
        top_down.append(v)
        if trace is not None:
            trace.append((v, val))
        remaining.discard(v)
    return LinearOrder.from_sequence(reversed(top_down))
