"""Reduction from balanced complete bipartite subgraph to weak 3-colouring.

Complementing a bipartite graph turns both sides into cliques; a ``K_{k,k}``
across the bipartition becomes a pair of sets with no edges between them,
which lets an order keep every weak reach set at most ``n - k``.
"""

from __future__ import annotations

from dataclasses import dataclass

from gencol.errors import InputError
from gencol.exact import biclique_bruteforce, wcol_exact
from gencol.graph import BipartiteGraph, Graph, complement
from gencol.reach import LinearOrder


def _check_k(bg: BipartiteGraph, k: int) -> None:
    smaller = min(len(bg.side(1)), len(bg.side(2)))
    if not 1 <= k <= smaller:
        raise InputError(f"biclique size must lie in 1..{smaller}, got {k}")


def bcbs_to_wcol(bg: BipartiteGraph, k: int) -> tuple[Graph, int]:
    """The complement of ``bg`` and the threshold ``n - k``."""
    _check_k(bg, k)
    return complement(bg.graph), bg.n - k


@dataclass(frozen=True)
class ReductionReport:
    n: int
    k: int
    threshold: int
    biclique: bool
    wcol3: int
    wcol4: int

    @property
    def equivalent(self) -> bool:
        return self.biclique == (self.wcol3 <= self.threshold)

    @property
    def stable(self) -> bool:
        return self.wcol3 == self.wcol4

    @property
    def ok(self) -> bool:
        return self.equivalent and self.stable


def verify_reduction(bg: BipartiteGraph, k: int, budget: int | None = None) -> ReductionReport:
    """Solve both sides exactly and compare.

    The biclique exists iff the complement has weak 3-colouring number at most
    ``n - k``; radius 4 must give the same value as radius 3.
    """
    g, threshold = bcbs_to_wcol(bg, k)
    return ReductionReport(
        n=bg.n,
        k=k,
        threshold=threshold,
        biclique=biclique_bruteforce(bg, k),
        wcol3=wcol_exact(g, 3, budget),
        wcol4=wcol_exact(g, 4, budget),
    )


def witness_order(bg: BipartiteGraph, W1, W2) -> LinearOrder:
    """Everything outside ``W1 | W2`` first, then ``W1``, then ``W2`` (each by id).

    ``W1`` and ``W2`` must be equal-sized, non-empty and completely joined
    across the bipartition.
    """
    W1, W2 = set(W1), set(W2)
    if not W1 or len(W1) != len(W2):
        raise InputError("biclique sides must be non-empty and of equal size")
    if W1 & W2:
        raise InputError("biclique sides overlap")
    sides = {bg.sides[v] for v in W1}, {bg.sides[v] for v in W2}
    if len(sides[0]) != 1 or len(sides[1]) != 1 or sides[0] == sides[1]:
        raise InputError("each biclique side must sit inside one side of the bipartition")
    adj = bg.graph.adj_sets
    for u in W1:
        if not W2 <= adj[u]:
            raise InputError(f"vertex {u} misses part of the other side")
    rest = [v for v in range(bg.n) if v not in W1 and v not in W2]
    return LinearOrder.from_sequence(rest + sorted(W1) + sorted(W2))
