"""Seeded random instances.

Every generator takes a ``random.Random`` (Mersenne Twister), so a single
integer seed reproduces an instance on any platform.
"""

from __future__ import annotations

import random
from itertools import combinations

from gencol.errors import InputError
from gencol.graph import BipartiteGraph, Graph
from gencol.reach import LinearOrder
from gencol.treedec import TreeDecomposition


def _rng(rng) -> random.Random:
    return rng if isinstance(rng, random.Random) else random.Random(rng)


def gnp(n: int, p: float, rng=None) -> Graph:
    """Each of the ``C(n, 2)`` edges independently with probability ``p``."""
    if n < 0 or not 0 <= p <= 1:
        raise InputError("need n >= 0 and 0 <= p <= 1")
    rng = _rng(rng)
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_partial_ktree(
    n: int, k: int, rng=None, keep: float = 0.8
) -> tuple[Graph, TreeDecomposition]:
    """A random ``k``-tree with each edge kept with probability ``keep``,
    and the width-``k`` decomposition the construction produces.

    The first ``k + 1`` vertices form the root bag; every later vertex copies
    ``k`` vertices of a random earlier bag into a new child bag.
    """
    if k < 1 or n < 1:
        raise InputError("need n >= 1 and k >= 1")
    rng = _rng(rng)
    first = list(range(min(n, k + 1)))
    bags = [frozenset(first)]
    parent = [-1]
    edges = set(combinations(first, 2))
    for v in range(len(first), n):
        t = rng.randrange(len(bags))
        clique = rng.sample(sorted(bags[t]), k)
        bags.append(frozenset(clique) | {v})
        parent.append(t)
        edges.update((u, v) for u in clique)
    kept = [e for e in sorted(edges) if rng.random() < keep]
    td = TreeDecomposition(tuple(bags), tuple(parent), 0, smooth=True)
    return Graph(n, kept), td


def random_bipartite(n1: int, n2: int, p: float, rng=None) -> BipartiteGraph:
    if n1 < 0 or n2 < 0 or not 0 <= p <= 1:
        raise InputError("need non-negative sides and 0 <= p <= 1")
    rng = _rng(rng)
    edges = [(a, n1 + b) for a in range(n1) for b in range(n2) if rng.random() < p]
    return BipartiteGraph.from_parts(n1, n2, edges)


def plant_biclique(bg: BipartiteGraph, k: int, rng=None) -> tuple[BipartiteGraph, list[int], list[int]]:
    """Add all edges between ``k`` random vertices of each side."""
    rng = _rng(rng)
    left, right = bg.side(1), bg.side(2)
    if not 1 <= k <= min(len(left), len(right)):
        raise InputError("biclique does not fit")
    W1, W2 = sorted(rng.sample(left, k)), sorted(rng.sample(right, k))
    edges = set(bg.graph.edges())
    edges.update((min(a, b), max(a, b)) for a in W1 for b in W2)
    return BipartiteGraph(Graph(bg.n, sorted(edges)), bg.sides), W1, W2


def random_order(n: int, rng=None) -> LinearOrder:
    """Uniform permutation by Fisher-Yates shuffle."""
    rng = _rng(rng)
    seq = list(range(n))
    rng.shuffle(seq)
    return LinearOrder.from_sequence(seq)
