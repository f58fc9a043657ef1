"""Exact generalised colouring numbers, treewidth and treedepth on small graphs.

Each colouring-number solver runs a decision search for increasing thresholds,
starting at ``degeneracy + 1`` and stopping below the best heuristic order, so
the first feasible threshold is the exact value. Everything is deterministic.

Graphs above ``EXACT_CAP`` vertices are refused unless a node budget is given
explicitly; running out of budget raises :class:`ResourceError` carrying the
bounds known at that point.
"""

from __future__ import annotations

from itertools import combinations

from gencol.errors import InputError, ResourceError
from gencol.graph import BipartiteGraph, Graph
from gencol.heuristics import degeneracy_order, greedy_adm_order, peel
from gencol.reach import LinearOrder, eval_adm, eval_col, eval_wcol, path_packing

EXACT_CAP = 11
DEFAULT_BUDGET = 5_000_000


class _OutOfBudget(Exception):
    pass


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise _OutOfBudget


def _make_budget(g: Graph, budget: int | None, cap: int) -> _Budget:
    if budget is None:
        if g.n > cap:
            raise InputError(
                f"graph has {g.n} vertices, above the exact-solver cap of {cap}; "
                "pass an explicit budget to go beyond it"
            )
        return _Budget(DEFAULT_BUDGET)
    if budget < 1:
        raise InputError("budget must be positive")
    return _Budget(budget)


def _check_radius(r: int) -> None:
    if r < 0:
        raise InputError("radius must be non-negative")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _components(nbr, mask: int) -> list[int]:
    comps = []
    while mask:
        comp = frontier = mask & -mask
        while frontier:
            grown = 0
            for x in _bits(frontier):
                grown |= nbr[x]
            frontier = grown & mask & ~comp
            comp |= frontier
        comps.append(comp)
        mask &= ~comp
    return comps


def degeneracy(g: Graph) -> int:
    """Smallest ``d`` such that every subgraph has a vertex of degree at most ``d``."""
    return peel(g)[1]


def _heuristic_orders(g: Graph, r: int) -> list[LinearOrder]:
    orders = [degeneracy_order(g), LinearOrder.identity(g.n)]
    if r >= 1 and g.n:
        orders.append(greedy_adm_order(g, r))
    return orders


def _solve(g, r, budget, evaluate, decide):
    lb = 1 if r == 0 or g.n == 0 else degeneracy(g) + 1
    if g.n == 0:
        return 0, LinearOrder.identity(0)
    best_val, best_order = None, None
    for order in _heuristic_orders(g, r):
        val = evaluate(g, order, r)
        if best_val is None or val < best_val:
            best_val, best_order = val, order
    k = lb
    try:
        while k < best_val:
            found = decide(g, r, k, budget)
            if found is not None:
                return k, found
            k += 1
    except _OutOfBudget:
        raise ResourceError(
            f"search budget of {budget.limit} nodes exhausted",
            lower=k,
            upper=best_val,
        ) from None
    return best_val, best_order


# -- weak colouring number -----------------------------------------------------


def _ball(nbr, comp: int, u: int, r: int) -> int:
    """Vertices of ``comp`` other than ``u`` within distance ``r`` of ``u`` in ``G[comp]``."""
    seen = frontier = 1 << u
    for _ in range(r):
        grown = 0
        for x in _bits(frontier):
            grown |= nbr[x]
        frontier = grown & comp & ~seen
        if not frontier:
            break
        seen |= frontier
    return seen & ~(1 << u)


def _wcol_decide(g: Graph, r: int, k: int, budget: _Budget) -> LinearOrder | None:
    """An order whose weak ``r``-reach sets all have size ``<= k``, or ``None``.

    Vertices are placed smallest first. The vertex ``u`` placed first inside a
    component of the unplaced set joins the weak reach of exactly the vertices
    of its ``r``-ball in that component, and afterwards the components of the
    remaining set never interact. ``slack[v]`` counts how many more vertices
    ``v`` may weakly reach.
    """
    nbr = g.nbr_masks
    memo: dict = {}

    def solve(comp: int, slack: dict[int, int]) -> list[int] | None:
        size = _popcount(comp)
        if size == 1:
            return [comp.bit_length() - 1]
        verts = list(_bits(comp))
        key = (comp, tuple(min(slack[v], size - 1) for v in verts))
        if key in memo:
            return memo[key]
        budget.tick()
        tight = 0
        for v in verts:
            if slack[v] == 0:
                if nbr[v] & tight:
                    # whichever comes first lands in the other's reach
                    memo[key] = None
                    return None
                tight |= 1 << v
        balls = {u: _ball(nbr, comp, u, r) for u in verts}
        tried = set()
        result = None
        for u in sorted(verts, key=lambda x: (-_popcount(balls[x]), x)):
            b = balls[u]
            if b & tight:
                continue
            # swapping twins with equal slack maps this state onto itself
            open_sig = ("o", nbr[u] & comp, slack[u])
            closed_sig = ("c", (nbr[u] & comp) | (1 << u), slack[u])
            if open_sig in tried or closed_sig in tried:
                continue
            tried.add(open_sig)
            tried.add(closed_sig)
            after = dict(slack)
            for v in _bits(b):
                after[v] -= 1
            seq = [u]
            for part in sorted(_components(nbr, comp & ~(1 << u)), key=_popcount):
                sub = solve(part, {v: after[v] for v in _bits(part)})
                if sub is None:
                    seq = None
                    break
                seq.extend(sub)
            if seq is not None:
                result = seq
                break
        memo[key] = result
        return result

    seq = []
    for comp in _components(nbr, (1 << g.n) - 1):
        sub = solve(comp, {v: k - 1 for v in _bits(comp)})
        if sub is None:
            return None
        seq.extend(sub)
    return LinearOrder.from_sequence(seq)


def wcol_exact(
    g: Graph,
    r: int,
    budget: int | None = None,
    *,
    witness: bool = False,
    cap: int = EXACT_CAP,
):
    """Minimum over all orders of the largest weak ``r``-reach set.

    With ``witness=True`` returns ``(value, order)`` where ``order`` attains it.
    """
    _check_radius(r)
    b = _make_budget(g, budget, cap)
    value, order = _solve(g, r, b, eval_wcol, _wcol_decide)
    return (value, order) if witness else value


# -- strong colouring number and admissibility ------------------------------------


def _twin_classes(g: Graph) -> list[int]:
    """``rep[v]``: least vertex that is an open or closed twin of ``v``."""
    nbr = g.nbr_masks
    rep = list(range(g.n))
    first: dict = {}
    for v in range(g.n):
        for sig in (("o", nbr[v]), ("c", nbr[v] | (1 << v))):
            if sig in first:
                rep[v] = rep[first[sig]]
                break
        else:
            first[("o", nbr[v])] = v
            first[("c", nbr[v] | (1 << v))] = v
    return rep


def _strong_count(nbr, v: int, unplaced: int, placed: int, r: int) -> int:
    """Unplaced vertices other than ``v`` reachable from ``v`` by paths of length
    ``<= r`` whose inner vertices are all placed."""
    seen = frontier = 1 << v
    hit = 0
    for _ in range(r):
        grown = 0
        for x in _bits(frontier):
            grown |= nbr[x]
        grown &= ~seen
        hit |= grown & unplaced
        frontier = grown & placed
        seen |= grown
        if not frontier:
            break
    return _popcount(hit)


def _suffix_decide(cost):
    """Decision search that fixes the largest vertex first.

    Once every vertex above ``v`` is known, the strong reach and the
    admissibility of ``v`` depend only on that set, so the state is just the
    unplaced set and failures can be memoised.
    """

    def decide(g: Graph, r: int, k: int, budget: _Budget) -> LinearOrder | None:
        nbr = g.nbr_masks
        full = (1 << g.n) - 1
        rep = _twin_classes(g)
        failed: set[int] = set()
        top_down: list[int] = []

        def feasible(unplaced: int) -> bool:
            if not unplaced:
                return True
            if unplaced in failed:
                return False
            budget.tick()
            placed = full & ~unplaced
            reps_seen = set()
            for v in _bits(unplaced):
                # twins with both still unplaced are interchangeable
                if rep[v] in reps_seen:
                    continue
                reps_seen.add(rep[v])
                if cost(g, nbr, v, unplaced, placed, r) > k:
                    continue
                top_down.append(v)
                if feasible(unplaced & ~(1 << v)):
                    return True
                top_down.pop()
            failed.add(unplaced)
            return False

        if not feasible(full):
            return None
        return LinearOrder.from_sequence(reversed(top_down))

    return decide


def _col_cost(g, nbr, v, unplaced, placed, r):
    return 1 + _strong_count(nbr, v, unplaced, placed, r)


def _adm_cost(g, nbr, v, unplaced, placed, r):
    targets = [u for u in _bits(unplaced) if u != v]
    if not targets or r == 0:
        return 1
    return 1 + path_packing(g, v, targets, list(_bits(placed)), r)


_col_decide = _suffix_decide(_col_cost)
_adm_decide = _suffix_decide(_adm_cost)


def col_exact(g: Graph, r: int, budget: int | None = None, *, witness: bool = False, cap: int = EXACT_CAP):
    """Minimum over all orders of the largest strong ``r``-reach set."""
    _check_radius(r)
    b = _make_budget(g, budget, cap)
    value, order = _solve(g, r, b, eval_col, _col_decide)
    return (value, order) if witness else value


def adm_exact(g: Graph, r: int, budget: int | None = None, *, witness: bool = False, cap: int = EXACT_CAP):
    """Minimum over all orders of the largest ``r``-admissibility."""
    _check_radius(r)
    b = _make_budget(g, budget, cap)
    value, order = _solve(g, r, b, eval_adm, _adm_decide)
    return (value, order) if witness else value


# -- treewidth and treedepth -------------------------------------------------------


def _elimination_width(g: Graph, seq) -> int:
    """Largest neighbourhood size met while eliminating ``seq`` and turning
    each eliminated vertex's neighbourhood into a clique."""
    adj = [set(a) for a in g.adj]
    width = 0
    for v in seq:
        nb = adj[v]
        width = max(width, len(nb))
        for a in nb:
            adj[a].discard(v)
            adj[a] |= nb - {a}
        adj[v] = set()
    return width


def treewidth_small(
    g: Graph,
    budget: int | None = None,
    *,
    witness: bool = False,
    cap: int = EXACT_CAP,
):
    """Exact treewidth as the best width over elimination orders.

    With ``witness=True`` returns ``(width, elimination sequence)``.
    """
    b = _make_budget(g, budget, cap)
    if g.n == 0:
        return (0, []) if witness else 0
    best_seq = _min_degree_elimination(g)
    ub = _elimination_width(g, best_seq)
    lb = degeneracy(g)
    k = lb
    try:
        while k < ub:
            found = _tw_decide(g, k, b)
            if found is not None:
                return (k, found) if witness else k
            k += 1
    except _OutOfBudget:
        raise ResourceError(
            f"search budget of {b.limit} nodes exhausted", lower=k, upper=ub
        ) from None
    return (ub, best_seq) if witness else ub


def _min_degree_elimination(g: Graph) -> list[int]:
    adj = [set(a) for a in g.adj]
    alive = set(range(g.n))
    seq = []
    while alive:
        v = min(alive, key=lambda x: (len(adj[x]), x))
        nb = adj[v]
        for a in nb:
            adj[a].discard(v)
            adj[a] |= nb - {a}
        alive.discard(v)
        seq.append(v)
    return seq


def _tw_decide(g: Graph, k: int, budget: _Budget) -> list[int] | None:
    """An elimination order of width ``<= k``, or ``None``."""
    failed: set[frozenset] = set()

    def run(adj: dict[int, frozenset]) -> list[int] | None:
        if len(adj) <= k + 1:
            return sorted(adj)
        key = frozenset(adj)
        if key in failed:
            return None
        budget.tick()
        # a simplicial vertex of small degree can always go first
        for v in sorted(adj):
            nb = adj[v]
            if len(nb) <= k and all(nb - {a} <= adj[a] for a in nb):
                rest = run(_eliminate(adj, v))
                if rest is None:
                    failed.add(key)
                    return None
                return [v] + rest
        for v in sorted(adj, key=lambda x: (len(adj[x]), x)):
            if len(adj[v]) > k:
                continue
            rest = run(_eliminate(adj, v))
            if rest is not None:
                return [v] + rest
        failed.add(key)
        return None

    return run({v: frozenset(g.adj[v]) for v in range(g.n)})


def _eliminate(adj: dict[int, frozenset], v: int) -> dict[int, frozenset]:
    nb = adj[v]
    out = {}
    for u, a in adj.items():
        if u == v:
            continue
        if u in nb:
            out[u] = (a | nb) - {u, v}
        else:
            out[u] = a
    return out


def treedepth_small(g: Graph, budget: int | None = None, *, cap: int = EXACT_CAP) -> int:
    """Exact treedepth: a connected graph needs one root plus the treedepth of
    what remains, and disconnected parts are independent."""
    b = _make_budget(g, budget, cap)
    nbr = g.nbr_masks
    memo: dict[int, int] = {}

    def td(mask: int) -> int:
        if not mask:
            return 0
        if mask & (mask - 1) == 0:
            return 1
        if mask in memo:
            return memo[mask]
        comps = _components(nbr, mask)
        if len(comps) > 1:
            val = max(td(c) for c in comps)
            memo[mask] = val
            return val
        b.tick()
        best = _popcount(mask)
        for v in _bits(mask):
            val = 1 + td(mask & ~(1 << v))
            if val < best:
                best = val
        memo[mask] = best
        return best

    try:
        return td((1 << g.n) - 1)
    except _OutOfBudget:
        raise ResourceError(
            f"search budget of {b.limit} nodes exhausted", lower=1, upper=g.n
        ) from None


# -- bicliques -----------------------------------------------------------------------


def biclique_bruteforce(bg: BipartiteGraph, k: int) -> bool:
    """Whether some ``k`` vertices of one side and ``k`` of the other are all adjacent."""
    if k < 1:
        raise InputError("biclique size must be at least 1")
    left, right = bg.side(1), bg.side(2)
    if len(left) > len(right):
        left, right = right, left
    if len(left) < k:
        return False
    adj = bg.graph.adj_sets
    for chosen in combinations(left, k):
        common = set(adj[chosen[0]])
        for x in chosen[1:]:
            common &= adj[x]
            if len(common) < k:
                break
        if len(common) >= k:
            return True
    return False
