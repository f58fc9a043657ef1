"""Immutable simple graphs, elementary measurements and the edge-list format."""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from gencol.errors import InputError


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency lists are sorted tuples. Instances are immutable and hashable,
    so they can be shared freely between workers.
    """

    __slots__ = ("n", "adj", "m", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise InputError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        self.n = n
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.m = m

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        """Build from neighbour lists; each edge may appear in one or both lists."""
        edges = set()
        for u, row in enumerate(adj):
            for v in row:
                if u == v:
                    raise InputError(f"self-loop at vertex {u}")
                edges.add((min(u, v), max(u, v)))
        return cls(len(adj), sorted(edges))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def check_vertex(self, v) -> int:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self.n:
            raise InputError(f"invalid vertex {v!r} for graph with n={self.n}")
        return int(v)

    @cached_property
    def adj_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def nbr_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks (bit ``u`` set for neighbour ``u``)."""
        out = []
        for a in self.adj:
            mask = 0
            for u in a:
                mask |= 1 << u
            out.append(mask)
        return tuple(out)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for v, a in enumerate(self.adj):
            indptr[v + 1] = indptr[v] + len(a)
        indices = np.fromiter(
            (u for a in self.adj for u in a), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the new->old map."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u in keep
            for v in self.adj[u]
            if u < v and v in index
        ]
        return Graph(len(keep), edges), keep

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(bfs_distances(self, 0)) == self.n

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = list(bfs_distances(self, s))
            for v in comp:
                seen[v] = True
            comps.append(sorted(comp))
        return comps

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class BipartiteGraph:
    """A graph together with a side label (1 or 2) for every vertex."""

    def __init__(self, graph: Graph, sides: Sequence[int]):
        if len(sides) != graph.n:
            raise InputError("side labels must cover every vertex")
        sides = tuple(int(s) for s in sides)
        if any(s not in (1, 2) for s in sides):
            raise InputError("side labels must be 1 or 2")
        for u, v in graph.edges():
            if sides[u] == sides[v]:
                raise InputError(f"edge ({u}, {v}) lies inside side {sides[u]}")
        self.graph = graph
        self.sides = sides

    @classmethod
    def from_parts(cls, n1: int, n2: int, edges: Iterable[tuple[int, int]]):
        """Vertices ``0..n1-1`` form side 1 and ``n1..n1+n2-1`` side 2."""
        return cls(Graph(n1 + n2, edges), [1] * n1 + [2] * n2)

    @classmethod
    def two_colour(cls, graph: Graph) -> "BipartiteGraph":
        """Recover a bipartition by BFS; the smallest vertex of each component gets side 1."""
        sides = [0] * graph.n
        for s in range(graph.n):
            if sides[s]:
                continue
            sides[s] = 1
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in graph.adj[x]:
                    if not sides[y]:
                        sides[y] = 3 - sides[x]
                        queue.append(y)
                    elif sides[y] == sides[x]:
                        raise InputError("graph is not bipartite")
        return cls(graph, sides)

    def side(self, s: int) -> list[int]:
        return [v for v in range(self.graph.n) if self.sides[v] == s]

    @property
    def n(self) -> int:
        return self.graph.n

    def __repr__(self):
        return f"BipartiteGraph({len(self.side(1))}+{len(self.side(2))}, m={self.graph.m})"


def bfs_distances(g: Graph, source: int, radius: float = math.inf, allowed=None) -> dict[int, int]:
    """Distances from ``source`` up to ``radius``, optionally inside an allowed vertex set."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if d >= radius:
            continue
        for y in g.adj[x]:
            if y not in dist and (allowed is None or y in allowed):
                dist[y] = d + 1
                queue.append(y)
    return dist


def bfs_ball(g: Graph, v: int, r: int) -> frozenset[int]:
    """The closed r-neighbourhood of ``v``."""
    v = g.check_vertex(v)
    if r < 0:
        raise InputError("radius must be non-negative")
    return frozenset(bfs_distances(g, v, r))


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def subdivide(g: Graph, s: int) -> Graph:
    """Replace every edge by a path with exactly ``s`` new internal vertices.

    Original vertices keep their ids. The internal vertices of the ``i``-th edge
    ``(u, v)`` (edges in sorted order, ``u < v``) are ``n + i*s .. n + i*s + s-1``,
    numbered from the ``u`` end.
    """
    if s < 0:
        raise InputError("subdivision depth must be non-negative")
    if s == 0:
        return g
    edges = []
    nxt = g.n
    for u, v in g.edges():
        path = [u] + list(range(nxt, nxt + s)) + [v]
        nxt += s
        edges.extend(zip(path, path[1:]))
    return Graph(nxt, edges)


def complement(g: Graph) -> Graph:
    return Graph(
        g.n,
        [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if v not in g.adj_sets[u]],
    )


def edge_density(g: Graph) -> Fraction:
    if g.n == 0:
        raise InputError("edge density of the empty graph is undefined")
    return Fraction(g.m, g.n)


def eccentricity(g: Graph, v: int, allowed=None) -> float:
    dist = bfs_distances(g, v, allowed=allowed)
    target = g.n if allowed is None else len(allowed)
    if len(dist) < target:
        return math.inf
    return max(dist.values())


def radius(g: Graph, vertices=None) -> float:
    """Radius of ``g`` (or of the subgraph induced by ``vertices``)."""
    allowed = None if vertices is None else frozenset(vertices)
    pool = range(g.n) if allowed is None else sorted(allowed)
    return min((eccentricity(g, v, allowed) for v in pool), default=math.inf)


# -- edge-list files ---------------------------------------------------------


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"line {lineno}: non-integer token in {raw!r}") from None
    if not rows:
        raise InputError("missing 'n m' header")
    _, n, m = rows[0]
    if n < 0 or m < 0:
        raise InputError("header values must be non-negative")
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header announces {m} edges, found {len(body)}")
    seen = set()
    edges = []
    for lineno, u, v in body:
        if u == v:
            raise InputError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"line {lineno}: duplicate edge {key}")
        if not (0 <= key[0] and key[1] < n):
            raise InputError(f"line {lineno}: vertex out of range 0..{n - 1}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(g))
