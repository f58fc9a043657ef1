"""Weak and strong r-reachability, r-admissibility and layered reach profiles."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from gencol import kernels
from gencol.errors import InputError
from gencol.graph import Graph, bfs_distances


class LinearOrder:
    """A bijection from vertices to ranks ``1..n``.

    ``rank[v]`` is the rank of ``v``; ``seq`` lists vertices by increasing rank.
    """

    __slots__ = ("rank", "seq", "__dict__")

    def __init__(self, rank: Sequence[int]):
        rank = tuple(int(x) for x in rank)
        n = len(rank)
        if sorted(rank) != list(range(1, n + 1)):
            raise InputError("ranks must be a permutation of 1..n")
        seq = [0] * n
        for v, k in enumerate(rank):
            seq[k - 1] = v
        self.rank = rank
        self.seq = tuple(seq)

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> "LinearOrder":
        """Order in which ``seq[0]`` is the smallest vertex."""
        seq = list(seq)
        rank = [0] * len(seq)
        for i, v in enumerate(seq):
            if not 0 <= v < len(seq) or rank[v]:
                raise InputError("sequence must be a permutation of 0..n-1")
            rank[v] = i + 1
        return cls(rank)

    @classmethod
    def identity(cls, n: int) -> "LinearOrder":
        return cls(range(1, n + 1))

    @cached_property
    def rank_array(self) -> np.ndarray:
        return np.asarray(self.rank, dtype=np.int64)

    def reversed(self) -> "LinearOrder":
        return LinearOrder.from_sequence(reversed(self.seq))

    def __len__(self):
        return len(self.rank)

    def __iter__(self):
        return iter(self.seq)

    def __eq__(self, other):
        return isinstance(other, LinearOrder) and self.rank == other.rank

    def __hash__(self):
        return hash(self.rank)

    def __repr__(self):
        return f"LinearOrder({list(self.seq)})"


def _check(g: Graph, order: LinearOrder, r: int) -> None:
    if len(order) != g.n:
        raise InputError(f"order has {len(order)} vertices, graph has {g.n}")
    if r < 0:
        raise InputError("radius must be non-negative")


def format_order(order: LinearOrder) -> str:
    return " ".join(map(str, order.rank)) + "\n"


def parse_order(text: str) -> LinearOrder:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 1:
        raise InputError("order file must contain exactly one line of ranks")
    try:
        return LinearOrder(int(tok) for tok in lines[0].split())
    except ValueError:
        raise InputError("order file contains a non-integer token") from None


def read_order(path) -> LinearOrder:
    with open(path) as fh:
        return parse_order(fh.read())


def write_order(order: LinearOrder, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_order(order))


# -- single-vertex queries ---------------------------------------------------


def wreach(g: Graph, order: LinearOrder, v: int, r: int) -> frozenset[int]:
    """Vertices weakly r-reachable from ``v``.

    ``u`` qualifies when some path of length at most ``r`` joins ``v`` to ``u``
    and ``u`` is the smallest vertex on it; equivalently ``v`` lies within
    distance ``r`` of ``u`` in the subgraph induced by vertices not below ``u``.
    """
    _check(g, order, r)
    v = g.check_vertex(v)
    rank = order.rank
    out = {v}
    for u in bfs_distances(g, v, r):
        if rank[u] >= rank[v] or u == v:
            continue
        above = {w for w in range(g.n) if rank[w] >= rank[u]}
        if v in bfs_distances(g, u, r, allowed=above):
            out.add(u)
    return frozenset(out)


def sreach(g: Graph, order: LinearOrder, v: int, r: int) -> frozenset[int]:
    """Vertices strongly r-reachable from ``v`` (inner path vertices all above ``v``)."""
    _check(g, order, r)
    v = g.check_vertex(v)
    rank = order.rank
    rv = rank[v]
    out = {v}
    if r == 0:
        return frozenset(out)
    above = {w for w in range(g.n) if rank[w] > rv}
    for x, d in bfs_distances(g, v, r - 1, allowed=above).items():
        out.update(y for y in g.adj[x] if rank[y] < rv)
    return frozenset(out)


# -- disjoint path packing ---------------------------------------------------


def _restrict(g: Graph, v: int, targets, inner, r: int):
    """Inner vertices and targets that can lie on a v-target path of length <= r."""
    dv = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        if dv[x] >= r:
            continue
        for y in g.adj[x]:
            if y in dv:
                continue
            if y in targets:
                dv[y] = dv[x] + 1
            elif y in inner:
                dv[y] = dv[x] + 1
                queue.append(y)
    reach_t = [t for t in dv if t in targets]
    dt = {t: 0 for t in reach_t}
    queue = deque(reach_t)
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y in inner and y in dv and y not in dt:
                dt[y] = dt[x] + 1
                queue.append(y)
    live_inner = {x for x in dt if x in inner and dv[x] + dt[x] <= r}
    live_targets = {t for t in reach_t}
    return live_inner, live_targets


def _flow_bound(g: Graph, v: int, inner: set, targets: set) -> int:
    """Vertex-disjoint v->targets paths ignoring length (Menger upper bound)."""
    # node x is split into (x, 0) in-side and (x, 1) out-side with unit capacity.
    cap: dict = {}

    def add(a, b):
        cap.setdefault(a, {})
        cap.setdefault(b, {})
        cap[a][b] = cap[a].get(b, 0) + 1
        cap[b].setdefault(a, 0)

    src, sink = (v, 1), "sink"
    for x in inner:
        add((x, 0), (x, 1))
    for t in targets:
        add((t, 0), sink)
    for x in [v] + sorted(inner):
        for y in g.adj[x]:
            if y in inner or y in targets:
                add((x, 1), (y, 0))
    if src not in cap:
        return 0
    flow = 0
    while True:
        parent = {src: None}
        queue = deque([src])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1


def _greedy_packing(g: Graph, v: int, inner: set, targets: set, r: int) -> int:
    used: set = set()
    count = 0
    while True:
        parent = {v: None}
        queue = deque([(v, 0)])
        hit = None
        while queue and hit is None:
            x, d = queue.popleft()
            if d >= r:
                continue
            for y in g.adj[x]:
                if y in parent or y in used:
                    continue
                if y in targets:
                    parent[y] = x
                    hit = y
                    break
                if y in inner:
                    parent[y] = x
                    queue.append((y, d + 1))
        if hit is None:
            return count
        x = hit
        while x != v:
            used.add(x)
            x = parent[x]
        count += 1


def _exhaustive_packing(g, v, inner: set, targets: set, r: int, lower: int, upper: int) -> int:
    firsts = sorted(y for y in g.adj[v] if y in inner)
    best = lower

    def paths_from(x, length, used):
        # simple paths continuing from inner vertex x; yields used-sets incl. endpoint
        for y in g.adj[x]:
            if y in used:
                continue
            if y in targets:
                yield used | {y}
            elif y in inner and length + 1 < r:
                yield from paths_from(y, length + 1, used | {y})

    def search(i, count, used):
        nonlocal best
        if count > best:
            best = count
        if best >= upper or count + (len(firsts) - i) <= best:
            return
        a = firsts[i]
        if a not in used:
            for used2 in paths_from(a, 1, used | {a}):
                search(i + 1, count + 1, used2)
                if best >= upper:
                    return
        search(i + 1, count, used)

    search(0, 0, frozenset())
    return best


def path_packing(g: Graph, v: int, targets, inner, r: int) -> int:
    """Maximum number of paths of length ``1..r`` from ``v`` to distinct vertices of
    ``targets`` whose inner vertices lie in ``inner``, pairwise meeting only in ``v``.

    Greedy shortest-path packing gives a lower bound and a unit-capacity flow
    (lengths ignored) an upper bound; exhaustive search settles any gap.
    """
    if r <= 0:
        return 0
    targets = set(targets)
    targets.discard(v)
    inner = set(inner) - targets
    inner.discard(v)
    live_inner, live_targets = _restrict(g, v, targets, inner, r)
    direct = {y for y in g.adj[v] if y in live_targets}
    live_targets -= direct
    base = len(direct)
    if not live_targets:
        return base
    upper = _flow_bound(g, v, live_inner, live_targets)
    if upper == 0:
        return base
    lower = _greedy_packing(g, v, live_inner, live_targets, r)
    if lower == upper:
        return base + lower
    return base + _exhaustive_packing(g, v, live_inner, live_targets, r, lower, upper)


def adm_at(g: Graph, order: LinearOrder, v: int, r: int) -> int:
    """r-admissibility of ``v``: the trivial path plus the maximum number of
    length-``<= r`` paths to smaller vertices that pairwise meet only in ``v``."""
    _check(g, order, r)
    v = g.check_vertex(v)
    rank = order.rank
    rv = rank[v]
    smaller = [u for u in range(g.n) if rank[u] < rv]
    larger = [u for u in range(g.n) if rank[u] > rv]
    return 1 + path_packing(g, v, smaller, larger, r)


# -- whole-order evaluation --------------------------------------------------


def weak_members(g: Graph, order: LinearOrder, r: int):
    """CSR ``(ptr, members, dist)``: row ``u`` lists the vertices that weakly reach ``u``."""
    _check(g, order, r)
    indptr, indices = g.csr
    return kernels.weak_bfs(indptr, indices, order.rank_array, r)


def strong_members(g: Graph, order: LinearOrder, r: int):
    """CSR ``(ptr, members, dist)``: row ``v`` lists ``SReach_r[v]`` minus ``v``."""
    _check(g, order, r)
    indptr, indices = g.csr
    return kernels.strong_bfs(indptr, indices, order.rank_array, r)


def wreach_sizes(g: Graph, order: LinearOrder, r: int) -> np.ndarray:
    _, members, _ = weak_members(g, order, r)
    return np.bincount(members, minlength=g.n)


def sreach_sizes(g: Graph, order: LinearOrder, r: int) -> np.ndarray:
    ptr, _, _ = strong_members(g, order, r)
    return np.diff(ptr) + 1


def wreach_all(g: Graph, order: LinearOrder, r: int) -> list[frozenset[int]]:
    ptr, members, _ = weak_members(g, order, r)
    out: list[set] = [set() for _ in range(g.n)]
    for u in range(g.n):
        for v in members[ptr[u]:ptr[u + 1]].tolist():
            out[v].add(u)
    return [frozenset(s) for s in out]


def eval_wcol(g: Graph, order: LinearOrder, r: int) -> int:
    if g.n == 0:
        return 0
    return int(wreach_sizes(g, order, r).max())


def eval_col(g: Graph, order: LinearOrder, r: int) -> int:
    if g.n == 0:
        return 0
    return int(sreach_sizes(g, order, r).max())


def eval_adm(g: Graph, order: LinearOrder, r: int) -> int:
    _check(g, order, r)
    return max((adm_at(g, order, v, r) for v in range(g.n)), default=0)


@dataclass(frozen=True)
class ReachProfile:
    """Per-vertex layer counts of weak and strong reach.

    ``weak_layers[v, i]`` is ``|WReach_i[v] \\ WReach_{i-1}[v]|`` (layer 0 is
    ``v`` itself); ``strong_layers`` likewise for strong reach.
    """

    r: int
    n: int
    weak_layers: np.ndarray
    strong_layers: np.ndarray

    @property
    def S(self) -> list[int]:
        return [int(x) for x in self.weak_layers.sum(axis=0)]

    @property
    def U(self) -> list[int]:
        return [int(x) for x in self.strong_layers.sum(axis=0)]

    @property
    def w(self) -> list[Fraction]:
        return [Fraction(s, self.n) for s in self.S]

    @property
    def c(self) -> list[Fraction]:
        return [Fraction(u, self.n) for u in self.U]

    def W(self, i: int | None = None) -> Fraction:
        """Mean weak reach up to radius ``i`` excluding the vertex itself."""
        i = self.r if i is None else i
        return sum(self.w[1 : i + 1], Fraction(0))

    def C(self, i: int | None = None) -> Fraction:
        i = self.r if i is None else i
        return sum(self.c[1 : i + 1], Fraction(0))

    def wreach_sizes(self) -> np.ndarray:
        return self.weak_layers.sum(axis=1)

    def sreach_sizes(self) -> np.ndarray:
        return self.strong_layers.sum(axis=1)


def profile(g: Graph, order: LinearOrder, r: int) -> ReachProfile:
    if g.n == 0:
        raise InputError("profile of the empty graph is undefined")
    _, members, dist = weak_members(g, order, r)
    weak = np.zeros((g.n, r + 1), dtype=np.int64)
    np.add.at(weak, (members, dist), 1)
    ptr, _, sdist = strong_members(g, order, r)
    strong = np.zeros((g.n, r + 1), dtype=np.int64)
    strong[:, 0] = 1
    rows = np.repeat(np.arange(g.n), np.diff(ptr))
    np.add.at(strong, (rows, sdist), 1)
    return ReachProfile(r=r, n=g.n, weak_layers=weak, strong_layers=strong)
