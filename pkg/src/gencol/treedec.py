"""Rooted tree decompositions: validation, smoothing, file IO, and the
bag-order that bounds weak colouring numbers by a binomial coefficient."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from gencol.errors import InputError, InvariantViolation
from gencol.graph import Graph
from gencol.reach import LinearOrder, eval_wcol


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags on a rooted tree. ``parent[root] == -1``.

    ``smooth`` is a claim carried with the object; :func:`validate_td`
    checks it against the bags.
    """

    bags: tuple[frozenset[int], ...]
    parent: tuple[int, ...]
    root: int = 0
    smooth: bool = False

    def __post_init__(self):
        if len(self.bags) != len(self.parent):
            raise InputError("bags and parent links differ in length")
        if not self.bags:
            raise InputError("a tree decomposition needs at least one node")
        if not 0 <= self.root < len(self.bags) or self.parent[self.root] != -1:
            raise InputError("root must be a node without parent")
        for t, p in enumerate(self.parent):
            if t != self.root and not 0 <= p < len(self.bags):
                raise InputError(f"node {t} has invalid parent {p}")
        if len(self.bfs_nodes()) != len(self.bags):
            raise InputError("parent links do not form a tree")

    @classmethod
    def from_edges(cls, bags, edges, root: int = 0, smooth: bool | None = None):
        """Build from an undirected tree edge list; ``smooth=None`` computes the flag."""
        bags = tuple(frozenset(b) for b in bags)
        N = len(bags)
        edges = list(edges)
        if N == 0:
            raise InputError("a tree decomposition needs at least one node")
        if len(edges) != N - 1:
            raise InputError(f"a tree on {N} nodes has {N - 1} edges, got {len(edges)}")
        nbrs = [[] for _ in range(N)]
        for s, t in edges:
            if not (0 <= s < N and 0 <= t < N) or s == t:
                raise InputError(f"bad tree edge ({s}, {t})")
            nbrs[s].append(t)
            nbrs[t].append(s)
        if not 0 <= root < N:
            raise InputError(f"root {root} out of range")
        parent = [-2] * N
        parent[root] = -1
        queue = deque([root])
        while queue:
            s = queue.popleft()
            for t in nbrs[s]:
                if parent[t] == -2:
                    parent[t] = s
                    queue.append(t)
        if -2 in parent:
            raise InputError("tree edges do not connect all nodes")
        if smooth is None:
            smooth = _is_smooth(bags, parent)
        return cls(bags, tuple(parent), root, smooth)

    @property
    def num_nodes(self) -> int:
        return len(self.bags)

    @property
    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1

    def children(self) -> list[list[int]]:
        kids = [[] for _ in self.bags]
        for t, p in enumerate(self.parent):
            if p >= 0:
                kids[p].append(t)
        return kids

    def tree_edges(self) -> list[tuple[int, int]]:
        return [(p, t) for t, p in enumerate(self.parent) if p >= 0]

    def bfs_nodes(self, root: int | None = None) -> list[int]:
        """Nodes in breadth-first order from ``root``, neighbours by increasing id."""
        root = self.root if root is None else root
        nbrs = [[] for _ in self.bags]
        for p, t in self.tree_edges():
            nbrs[p].append(t)
            nbrs[t].append(p)
        seen = {root}
        out = [root]
        queue = deque([root])
        while queue:
            s = queue.popleft()
            for t in sorted(nbrs[s]):
                if t not in seen:
                    seen.add(t)
                    out.append(t)
                    queue.append(t)
        return out

    def rerooted(self, root: int) -> "TreeDecomposition":
        return TreeDecomposition.from_edges(self.bags, self.tree_edges(), root, self.smooth)

    def relabelled(self) -> "TreeDecomposition":
        """Same decomposition with nodes renumbered in BFS order, so the root is node 0."""
        order = self.bfs_nodes()
        new_id = {t: i for i, t in enumerate(order)}
        bags = [self.bags[t] for t in order]
        edges = [(new_id[p], new_id[t]) for p, t in self.tree_edges()]
        return TreeDecomposition.from_edges(bags, edges, 0, self.smooth)


def _is_smooth(bags, parent) -> bool:
    for t, p in enumerate(parent):
        if p >= 0 and (len(bags[t] - bags[p]) > 1 or len(bags[p] - bags[t]) > 1):
            return False
    return True


def is_smooth(td: TreeDecomposition) -> bool:
    """Adjacent bags differ by at most one vertex in each direction."""
    return _is_smooth(td.bags, td.parent)


@dataclass
class TDReport:
    valid: bool
    width: int
    smooth: bool
    violation: str | None = None
    uncovered_vertex: int | None = None
    uncovered_edge: tuple[int, int] | None = None
    disconnected_vertex: int | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.valid


def validate_td(
    g: Graph,
    td: TreeDecomposition,
    *,
    separator_samples: int | None = None,
    check_flag: bool = True,
) -> TDReport:
    """Check vertex coverage, edge coverage, subtree connectivity and the smooth flag.

    The first violation found is reported. When assertions are enabled, a few
    random separator checks also run (a bag must separate the vertices that
    occur only on different sides of it); ``separator_samples`` overrides
    how many.
    """
    smooth = is_smooth(td)
    report = TDReport(valid=False, width=td.width, smooth=smooth)
    for t, bag in enumerate(td.bags):
        for v in bag:
            if not 0 <= v < g.n:
                report.violation = f"bag {t} holds vertex {v}, outside 0..{g.n - 1}"
                return report
    where: list[list[int]] = [[] for _ in range(g.n)]
    for t, bag in enumerate(td.bags):
        for v in bag:
            where[v].append(t)
    for v in range(g.n):
        if not where[v]:
            report.violation = f"vertex {v} is in no bag"
            report.uncovered_vertex = v
            return report
    for u, v in g.edges():
        if not any(v in td.bags[t] for t in where[u]):
            report.violation = f"edge ({u}, {v}) is in no bag"
            report.uncovered_edge = (u, v)
            return report
    for v in range(g.n):
        # the nodes holding v form a subtree iff exactly one of them lacks a parent holding v
        tops = sum(1 for t in where[v] if td.parent[t] < 0 or v not in td.bags[td.parent[t]])
        if tops != 1:
            report.violation = f"bags holding vertex {v} are not connected in the tree"
            report.disconnected_vertex = v
            return report
    if check_flag and td.smooth != smooth:
        report.violation = (
            "smooth flag is set but adjacent bags differ by more than one vertex"
            if td.smooth
            else "decomposition is smooth but not flagged as such"
        )
        return report
    if separator_samples is None:
        separator_samples = 8 if __debug__ else 0
    if separator_samples:
        bad = _separator_spot_check(g, td, separator_samples)
        if bad is not None:
            report.violation = f"bag {bad} does not separate its sides of the tree"
            report.details["separator_node"] = bad
            return report
    report.valid = True
    return report


def _separator_spot_check(g: Graph, td: TreeDecomposition, samples: int) -> int | None:
    rng = random.Random(0x5EED)
    nbrs = [[] for _ in td.bags]
    for p, t in td.tree_edges():
        nbrs[p].append(t)
        nbrs[t].append(p)
    for _ in range(samples):
        s = rng.randrange(td.num_nodes)
        sep = td.bags[s]
        side_of: dict[int, int] = {}
        mixed = set()
        for branch in nbrs[s]:
            stack, seen = [branch], {s, branch}
            while stack:
                t = stack.pop()
                for v in td.bags[t] - sep:
                    if side_of.setdefault(v, branch) != branch:
                        mixed.add(v)
                for x in nbrs[t]:
                    if x not in seen:
                        seen.add(x)
                        stack.append(x)
        if mixed:
            return s
        # any edge leaving X_s must stay inside one branch
        for u, v in g.edges():
            if u in side_of and v in side_of and side_of[u] != side_of[v]:
                return s
    return None


def make_smooth(g: Graph, td: TreeDecomposition) -> TreeDecomposition:
    """Equivalent smooth decomposition of the same width.

    Adjacent equal bags are merged, then every tree edge whose bags differ by
    more than one vertex is subdivided by bags that swap one vertex at a time.
    An already smooth decomposition is returned unchanged.
    """
    report = validate_td(g, td, separator_samples=0, check_flag=False)
    if not report.valid:
        raise InputError(f"invalid tree decomposition: {report.violation}")
    if is_smooth(td):
        return td if td.smooth else TreeDecomposition(td.bags, td.parent, td.root, True)

    # merge each node into its parent when the bags coincide
    rep = list(range(td.num_nodes))
    for t in td.bfs_nodes():
        p = td.parent[t]
        if p >= 0 and td.bags[t] == td.bags[p]:
            rep[t] = rep[p]
    keep = [t for t in td.bfs_nodes() if rep[t] == t]
    new_id = {t: i for i, t in enumerate(keep)}
    bags = [td.bags[t] for t in keep]
    edges = []
    for t in keep:
        p = td.parent[t]
        if p < 0:
            continue
        a, b = bags[new_id[rep[p]]], td.bags[t]
        drop, add = sorted(a - b), sorted(b - a)
        prev = new_id[rep[p]]
        current = set(a)
        for i in range(max(len(drop), len(add)) - 1):
            if i < len(drop):
                current.discard(drop[i])
            if i < len(add):
                current.add(add[i])
            bags.append(frozenset(current))
            edges.append((prev, len(bags) - 1))
            prev = len(bags) - 1
        edges.append((prev, new_id[t]))
    out = TreeDecomposition.from_edges(bags, edges, new_id[td.root], smooth=None)
    if __debug__:
        assert out.smooth and out.width == td.width
    return out


def td_order(g: Graph, td: TreeDecomposition, root: int | None = None) -> LinearOrder:
    """Order vertices by the breadth-first position of the highest bag holding them.

    Ties, which for a smooth decomposition only occur in the root bag, are
    broken by vertex id. ``root`` overrides the decomposition's root.
    """
    report = validate_td(g, td, separator_samples=0, check_flag=False)
    if not report.valid:
        raise InputError(f"invalid tree decomposition: {report.violation}")
    if not report.smooth:
        raise InputError("the bag order needs a smooth decomposition")
    first: dict[int, int] = {}
    for pos, t in enumerate(td.bfs_nodes(root)):
        for v in td.bags[t]:
            first.setdefault(v, pos)
    seq = sorted(range(g.n), key=lambda v: (first[v], v))
    return LinearOrder.from_sequence(seq)


@dataclass(frozen=True)
class BinomialCertificate:
    r: int
    width: int
    wcol: int
    bound: int


def binomial_certificate(g: Graph, td: TreeDecomposition, r: int) -> BinomialCertificate:
    """Evaluate the bag order and confirm ``wcol_r <= C(r + k, k)`` for width ``k``."""
    if r < 0:
        raise InputError("radius must be non-negative")
    k = max(td.width, 0)
    value = eval_wcol(g, td_order(g, td), r)
    bound = comb(r + k, k)
    if value > bound:
        raise InvariantViolation(
            f"bag order reaches {value} > C({r + k}, {k}) = {bound} at radius {r}"
        )
    return BinomialCertificate(r=r, width=k, wcol=value, bound=bound)


def decomposition_from_elimination(g: Graph, seq) -> TreeDecomposition:
    """Bag of ``v`` = ``v`` plus its neighbours when eliminated; hooked below the
    bag of the first of those neighbours to be eliminated later."""
    seq = list(seq)
    if sorted(seq) != list(range(g.n)):
        raise InputError("elimination sequence must list every vertex once")
    if g.n == 0:
        return TreeDecomposition((frozenset(),), (-1,), 0, True)
    pos = {v: i for i, v in enumerate(seq)}
    adj = [set(a) for a in g.adj]
    bags, parent_vertex = [], []
    for v in seq:
        nb = adj[v]
        bags.append(frozenset(nb | {v}))
        parent_vertex.append(min(nb, key=pos.__getitem__) if nb else None)
        for a in nb:
            adj[a].discard(v)
            adj[a] |= nb - {a}
    last = len(seq) - 1
    edges = []
    for i, pv in enumerate(parent_vertex):
        if i == last:
            continue
        # separate components are chained to the final bag; they share nothing
        edges.append((pos[pv] if pv is not None else last, i))
    return TreeDecomposition.from_edges(bags, edges, root=last).relabelled()


def small_decomposition(g: Graph, budget: int | None = None) -> TreeDecomposition:
    """Optimal-width decomposition from an exact elimination order."""
    from gencol.exact import treewidth_small

    _, seq = treewidth_small(g, budget, witness=True)
    return decomposition_from_elimination(g, seq)


# -- PACE-style files ----------------------------------------------------------------


def format_td(td: TreeDecomposition, n: int) -> str:
    """Header ``s td <bags> <width+1> <n>``, one ``b <id> <vertices>`` line per bag
    and one line per tree edge. Bag ids start at 1 (the root); vertices at 0."""
    td = td.relabelled()
    lines = [f"s td {td.num_nodes} {td.width + 1} {n}"]
    for t, bag in enumerate(td.bags):
        lines.append(" ".join(["b", str(t + 1), *map(str, sorted(bag))]))
    for p, t in sorted(td.tree_edges()):
        lines.append(f"{p + 1} {t + 1}")
    return "\n".join(lines) + "\n"


def parse_td(text: str) -> tuple[TreeDecomposition, int]:
    """Inverse of :func:`format_td`. Lines starting with ``c`` are comments."""
    header = None
    bags: dict[int, frozenset[int]] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "s":
                if header is not None or len(parts) != 5 or parts[1] != "td":
                    raise InputError(f"line {lineno}: bad header")
                header = tuple(int(x) for x in parts[2:])
            elif parts[0] == "b":
                if header is None:
                    raise InputError(f"line {lineno}: bag before header")
                bid = int(parts[1])
                if not 1 <= bid <= header[0] or bid in bags:
                    raise InputError(f"line {lineno}: bad or repeated bag id {bid}")
                vs = [int(x) for x in parts[2:]]
                if len(set(vs)) != len(vs):
                    raise InputError(f"line {lineno}: repeated vertex in bag {bid}")
                if any(not 0 <= v < header[2] for v in vs):
                    raise InputError(f"line {lineno}: vertex out of range in bag {bid}")
                bags[bid] = frozenset(vs)
            else:
                if header is None or len(parts) != 2:
                    raise InputError(f"line {lineno}: expected a tree edge")
                edges.append((int(parts[0]) - 1, int(parts[1]) - 1))
        except ValueError:
            raise InputError(f"line {lineno}: expected integers") from None
    if header is None:
        raise InputError("missing 's td' header")
    num_bags, size, n = header
    if len(bags) != num_bags:
        raise InputError(f"header announces {num_bags} bags, found {len(bags)}")
    ordered = [bags[i] for i in range(1, num_bags + 1)]
    if max(len(b) for b in ordered) != size:
        raise InputError(f"header announces bag size {size}, largest bag has {max(len(b) for b in ordered)}")
    return TreeDecomposition.from_edges(ordered, edges, root=0), n


def read_td(path) -> tuple[TreeDecomposition, int]:
    return parse_td(Path(path).read_text())


def write_td(td: TreeDecomposition, n: int, path) -> None:
    Path(path).write_text(format_td(td, n))
