"""Neighbourhood covers built from weak-reachability orders, plus validation,
projection through subdivisions and the girth-based degree floor."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from gencol.errors import InputError, InvariantViolation
from gencol.graph import Graph, bfs_ball, eccentricity, edge_density, girth, subdivide
from gencol.reach import LinearOrder, eval_wcol, weak_members


@dataclass(frozen=True)
class Cluster:
    center: int
    vertices: frozenset[int]


@dataclass(frozen=True)
class Cover:
    clusters: tuple[Cluster, ...]
    r: int

    def __post_init__(self):
        for cl in self.clusters:
            if not cl.vertices:
                raise InputError("clusters must be non-empty")
            if cl.center not in cl.vertices:
                raise InputError(f"center {cl.center} lies outside its cluster")

    def __len__(self) -> int:
        return len(self.clusters)

    def degrees(self, n: int) -> list[int]:
        deg = [0] * n
        for cl in self.clusters:
            for v in cl.vertices:
                deg[v] += 1
        return deg


def build_cover(g: Graph, order: LinearOrder, r: int) -> Cover:
    """One cluster per vertex ``w``: every ``u`` that weakly ``2r``-reaches ``w``.

    Each cluster has radius at most ``2r`` around ``w``; the ``r``-ball of ``v``
    lies in the cluster of its smallest vertex; and the degree of ``u`` is the
    size of its weak ``2r``-reach set.
    """
    if r < 1:
        raise InputError("cover radius must be at least 1")
    ptr, members, _ = weak_members(g, order, 2 * r)
    ptr, members = ptr.tolist(), members.tolist()
    clusters = tuple(
        Cluster(w, frozenset(members[ptr[w] : ptr[w + 1]]))
        for w in range(g.n)
        if ptr[w + 1] > ptr[w]
    )
    cover = Cover(clusters, r)
    if __debug__:
        _recheck_build(g, order, r, cover)
    return cover


def _recheck_build(g: Graph, order: LinearOrder, r: int, cover: Cover) -> None:
    by_center = {cl.center: cl.vertices for cl in cover.clusters}
    for cl in cover.clusters:
        ecc = eccentricity(g, cl.center, allowed=cl.vertices)
        if ecc > 2 * r:
            raise InvariantViolation(f"cluster of {cl.center} has radius {ecc} > {2 * r}")
    for v in range(g.n):
        ball = bfs_ball(g, v, r)
        w = min(ball, key=order.rank.__getitem__)
        if not ball <= by_center[w]:
            raise InvariantViolation(f"ball around {v} escapes the cluster of {w}")
    if max(cover.degrees(g.n), default=0) > eval_wcol(g, order, 2 * r):
        raise InvariantViolation("cover degree exceeds the weak 2r-colouring value of the order")


@dataclass
class CoverReport:
    is_cover: bool
    connected: bool
    max_radius: float
    max_center_radius: float
    max_degree: int
    uncovered_vertex: int | None = None
    disconnected_cluster: int | None = None
    radii: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "is_cover": self.is_cover,
            "connected": self.connected,
            "max_radius": _jsonable(self.max_radius),
            "max_center_radius": _jsonable(self.max_center_radius),
            "max_degree": self.max_degree,
            "uncovered_vertex": self.uncovered_vertex,
            "disconnected_cluster": self.disconnected_cluster,
        }


def _jsonable(x):
    return None if x == math.inf else x


def validate_cover(g: Graph, cover: Cover, r: int) -> CoverReport:
    """Check connectivity of every cluster and that every ``r``-ball sits in a cluster.

    ``max_radius`` uses each cluster's own radius inside the subgraph it
    induces; ``max_center_radius`` measures from the recorded centers.
    ``is_cover`` requires both the ball condition and connected clusters.
    """
    if r < 0:
        raise InputError("radius must be non-negative")
    containing: list[list[int]] = [[] for _ in range(g.n)]
    for i, cl in enumerate(cover.clusters):
        for v in cl.vertices:
            if not 0 <= v < g.n:
                raise InputError(f"cluster {i} holds vertex {v}, outside 0..{g.n - 1}")
            containing[v].append(i)
    radii = []
    center_radius = 0
    disconnected = None
    for i, cl in enumerate(cover.clusters):
        ecc_center = eccentricity(g, cl.center, allowed=cl.vertices)
        if ecc_center == math.inf:
            radii.append(math.inf)
            if disconnected is None:
                disconnected = i
        else:
            radii.append(min(eccentricity(g, u, allowed=cl.vertices) for u in cl.vertices))
        center_radius = max(center_radius, ecc_center)
    uncovered = None
    for v in range(g.n):
        ball = bfs_ball(g, v, r)
        if not any(ball <= cover.clusters[i].vertices for i in containing[v]):
            uncovered = v
            break
    connected = disconnected is None
    return CoverReport(
        is_cover=uncovered is None and connected,
        connected=connected,
        max_radius=max(radii, default=0),
        max_center_radius=center_radius,
        max_degree=max((len(c) for c in containing), default=0),
        uncovered_vertex=uncovered,
        disconnected_cluster=disconnected,
        radii=radii,
    )


def project_cover(g_sub: Graph, h: Graph, s: int, cover: Cover, r: int | None = None) -> Cover:
    """Restrict every cluster of a cover of the ``s``-subdivision of ``h`` to the
    original vertices; clusters left empty are dropped.

    A cluster whose center was a subdivision vertex is re-centred at its
    original vertex of least eccentricity (ties by id). The radius recorded on
    the result is ``r``, by default ``cover.r // s``. Distances in ``h`` are
    those in ``g_sub`` divided by ``s + 1``, so an ``r``-ball of ``h`` is only
    guaranteed to sit in a projected cluster when ``cover.r >= r * (s + 1)``.
    """
    if s < 0:
        raise InputError("subdivision depth must be non-negative")
    if g_sub != subdivide(h, s):
        raise InputError(f"first graph is not the {s}-subdivision of the second")
    if r is None:
        r = cover.r // s if s else cover.r
    out = []
    for cl in cover.clusters:
        kept = frozenset(v for v in cl.vertices if v < h.n)
        if not kept:
            continue
        center = cl.center
        if center >= h.n:
            center = min(kept, key=lambda v: (eccentricity(h, v, allowed=kept), v))
        out.append(Cluster(center, kept))
    return Cover(tuple(out), r)


def girth_degree_floor(g: Graph, k: int) -> Fraction:
    """Edge density of ``g``: no 1-neighbourhood cover of radius at most ``k``
    can have smaller degree when the girth exceeds ``k``."""
    if k < 1:
        raise InputError("radius bound must be positive")
    gg = girth(g)
    if gg < k + 1:
        raise InputError(f"girth {gg} is below {k + 1}")
    return edge_density(g)


# -- cover files ---------------------------------------------------------------------


def format_cover(cover: Cover) -> str:
    return "".join(
        f"{cl.center}: {' '.join(map(str, sorted(cl.vertices)))}\n" for cl in cover.clusters
    )


def parse_cover(text: str, r: int) -> Cover:
    clusters = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise InputError(f"line {lineno}: expected 'center: v1 v2 ...'")
        try:
            center = int(head)
            vs = [int(x) for x in tail.split()]
        except ValueError:
            raise InputError(f"line {lineno}: expected integers") from None
        if len(set(vs)) != len(vs):
            raise InputError(f"line {lineno}: repeated vertex")
        clusters.append(Cluster(center, frozenset(vs)))
    return Cover(tuple(clusters), r)


def read_cover(path, r: int) -> Cover:
    return parse_cover(Path(path).read_text(), r)


def write_cover(cover: Cover, path) -> None:
    Path(path).write_text(format_cover(cover))
