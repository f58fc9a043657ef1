"""Graphs of bounded treewidth whose weak colouring numbers meet the binomial bound.

For fixed ``k`` and ``r`` with ``c = C(r + k, k)``, the instance ``G(k, r)`` is
built from rooted trees ``T(k', r')`` whose nodes double as graph vertices:

* ``T(k', 1)``: complete ``c``-ary tree with ``k' + 1`` levels; each bag holds
  the node and all its ancestors.
* ``T(1, r')``: complete ``c``-ary tree with ``r' + 1`` levels; each bag holds
  the node and its parent.
* otherwise: below every leaf ``z`` of ``T(k', r' - 1)`` hang ``c`` copies of
  ``T(k' - 1, r')``, with ``z`` added to every bag of each copy.

Two vertices are adjacent exactly when some bag holds both. The branching
``c`` stays at its top-level value throughout the recursion.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from gencol.errors import InputError, ResourceError
from gencol.graph import Graph
from gencol.treedec import TreeDecomposition

DEFAULT_SIZE_CAP = 250_000


def _check_params(k: int, r: int) -> None:
    if k < 1 or r < 1:
        raise InputError("width and radius must both be at least 1")


def _counts(k: int, r: int, c: int) -> tuple[int, int]:
    """``(nodes, leaves)`` of ``T(k, r)`` with branching ``c``."""

    @lru_cache(maxsize=None)
    def go(kk: int, rr: int) -> tuple[int, int]:
        if rr == 1:
            return sum(c**i for i in range(kk + 1)), c**kk
        if kk == 1:
            return sum(c**i for i in range(rr + 1)), c**rr
        n_top, l_top = go(kk, rr - 1)
        n_sub, l_sub = go(kk - 1, rr)
        return n_top + l_top * c * n_sub, l_top * c * l_sub

    return go(k, r)


def size_estimate(k: int, r: int, c: int | None = None) -> int:
    """Vertex count of ``G(k, r)`` from the recursion alone.

    ``c`` defaults to ``C(r + k, k)``.
    """
    _check_params(k, r)
    if c is None:
        c = comb(r + k, k)
    if c < 1:
        raise InputError("branching must be positive")
    return _counts(k, r, c)[0]


def _build(k: int, r: int, c: int):
    """Parent links, bags and leaves of ``T(k, r)``; node ``0`` is the root."""

    def full_tree(levels: int, ancestors: bool):
        parent, bags, depth = [-1], [(0,)], [0]
        frontier = [0]
        for level in range(1, levels):
            nxt = []
            for p in frontier:
                for _ in range(c):
                    t = len(parent)
                    parent.append(p)
                    depth.append(level)
                    bags.append(bags[p] + (t,) if ancestors else (p, t))
                    nxt.append(t)
            frontier = nxt
        return parent, bags, frontier

    def go(kk: int, rr: int):
        if rr == 1:
            return full_tree(kk + 1, ancestors=True)
        if kk == 1:
            return full_tree(rr + 1, ancestors=False)
        parent, bags, leaves = go(kk, rr - 1)
        parent, bags = list(parent), list(bags)
        sub_parent, sub_bags, sub_leaves = go(kk - 1, rr)
        new_leaves = []
        for z in leaves:
            for _ in range(c):
                off = len(parent)
                for t, p in enumerate(sub_parent):
                    parent.append(z if p < 0 else p + off)
                    bags.append(tuple(x + off for x in sub_bags[t]) + (z,))
                new_leaves.extend(x + off for x in sub_leaves)
        return parent, bags, new_leaves

    return go(k, r)


@dataclass(frozen=True)
class ExtremalInstance:
    graph: Graph
    td: TreeDecomposition
    f: tuple[int, ...]
    k: int
    r: int
    c: int

    def check_invariants(self) -> None:
        """Raise :class:`InputError` unless ``f`` introduces each vertex at its
        node and every bag has at most ``k + 1`` vertices."""
        td = self.td
        if sorted(self.f) != list(range(self.graph.n)) or len(self.f) != td.num_nodes:
            raise InputError("f is not a bijection between nodes and vertices")
        if td.bags[td.root] != frozenset({self.f[td.root]}):
            raise InputError("root bag must be exactly the root's vertex")
        for t, p in enumerate(td.parent):
            if p >= 0 and td.bags[t] - td.bags[p] != frozenset({self.f[t]}):
                raise InputError(f"node {t} does not introduce exactly its own vertex")
        if td.width > self.k:
            raise InputError(f"a bag exceeds {self.k + 1} vertices")


def gen_gkr(k: int, r: int, *, size_cap: int = DEFAULT_SIZE_CAP) -> ExtremalInstance:
    """Build ``G(k, r)`` with its decomposition. Nodes and vertices are numbered
    in breadth-first order of the construction tree, and ``f`` is the identity."""
    _check_params(k, r)
    c = comb(r + k, k)
    size = size_estimate(k, r, c)
    if size > size_cap:
        raise ResourceError(
            f"G({k},{r}) has {size} vertices, above the cap of {size_cap}",
            lower=size,
            upper=size,
        )
    parent, bags, _ = _build(k, r, c)
    n = len(parent)
    kids = [[] for _ in range(n)]
    for t, p in enumerate(parent):
        if p >= 0:
            kids[p].append(t)
    order = []
    queue = deque([0])
    while queue:
        t = queue.popleft()
        order.append(t)
        queue.extend(kids[t])
    new = [0] * n
    for i, t in enumerate(order):
        new[t] = i
    new_bags = [frozenset(new[x] for x in bags[t]) for t in order]
    new_parent = [-1 if parent[t] < 0 else new[parent[t]] for t in order]
    edges = set()
    for bag in new_bags:
        edges.update(combinations(sorted(bag), 2))
    graph = Graph(n, sorted(edges))
    smooth = all(
        p < 0 or (len(new_bags[t] - new_bags[p]) <= 1 and len(new_bags[p] - new_bags[t]) <= 1)
        for t, p in enumerate(new_parent)
    )
    td = TreeDecomposition(tuple(new_bags), tuple(new_parent), 0, smooth)
    return ExtremalInstance(graph, td, tuple(range(n)), k, r, c)
