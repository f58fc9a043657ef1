"""Brute-force topological greatest reduced average density on tiny graphs.

``H`` is a topological depth-``r`` minor of ``G`` when ``G`` contains a
subdivision of ``H`` in which every edge becomes a path of length at most
``2r + 1``. The search picks the branch vertices ``B`` of ``H`` and then packs
as many paths between distinct pairs of ``B`` as possible, with inner
vertices outside ``B`` and pairwise disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gencol.errors import InputError, ResourceError
from gencol.exact import _Budget, _OutOfBudget, _make_budget, _popcount, adm_exact
from gencol.graph import Graph

GRAD_CAP = 12


def _internal_sets(g: Graph, r: int) -> dict[tuple[int, int], list[int]]:
    """For each pair ``a < b``: the inclusion-minimal inner-vertex masks of
    ``a``-``b`` paths of length at most ``2r + 1``. A direct edge gives mask 0."""
    max_len = 2 * r + 1
    found: dict[tuple[int, int], set[int]] = {}
    adj = g.adj

    def walk(start: int, x: int, inner: int, length: int) -> None:
        for y in adj[x]:
            if y == start or inner >> y & 1:
                continue
            if y > start:
                found.setdefault((start, y), set()).add(inner)
            if length + 1 < max_len:
                walk(start, y, inner | 1 << y, length + 1)

    for a in range(g.n):
        walk(a, a, 0, 0)
    out = {}
    for pair, masks in found.items():
        ordered = sorted(masks, key=_popcount)
        minimal: list[int] = []
        for m in ordered:
            if not any(p & m == p for p in minimal):
                minimal.append(m)
        out[pair] = minimal
    return out


def top_grad_bruteforce(
    g: Graph, r: int, budget: int | None = None, *, cap: int = GRAD_CAP
) -> Fraction:
    """``max |E(H)| / |V(H)|`` over topological depth-``r`` minors ``H`` of ``g``."""
    if r < 0:
        raise InputError("depth must be non-negative")
    b = _make_budget(g, budget, cap)
    if g.n == 0:
        return Fraction(0)
    paths = _internal_sets(g, r)
    best = Fraction(0)
    try:
        for B in range(1, 1 << g.n):
            size = _popcount(B)
            usable = []
            direct = 0
            for (a, c), masks in paths.items():
                if not (B >> a & 1 and B >> c & 1):
                    continue
                ok = [m for m in masks if not m & B]
                if not ok:
                    continue
                if ok[0] == 0:
                    direct += 1
                else:
                    usable.append(ok)
            if Fraction(direct + len(usable), size) <= best:
                continue
            need = best * size  # a packing must beat this many edges
            got = direct + _pack(usable, need - direct, b)
            if Fraction(got, size) > best:
                best = Fraction(got, size)
    except _OutOfBudget:
        raise ResourceError(
            f"search budget of {b.limit} nodes exhausted", lower=best, upper=None
        ) from None
    return best


def _pack(options: list[list[int]], target, budget: _Budget) -> int:
    """Most pairs served by disjoint inner sets, one set per pair. Branches stop
    once they cannot exceed ``target``."""
    options = sorted(options, key=len)
    best = 0

    def go(i: int, used: int, count: int) -> None:
        nonlocal best
        budget.tick()
        if count > best:
            best = count
        left = len(options) - i
        if count + left <= max(best, target):
            return
        for m in options[i]:
            if not m & used:
                go(i + 1, used | m, count + 1)
                if best == len(options):
                    return
        go(i + 1, used, count)

    go(0, 0, 0)
    return best


@dataclass(frozen=True)
class AdmBoundReport:
    r: int
    adm: int
    grad: Fraction
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.adm <= self.bound

    @property
    def slack(self) -> Fraction:
        return self.bound - self.adm


def check_adm_bound(g: Graph, r: int, budget: int | None = None) -> AdmBoundReport:
    """Compare ``adm_r`` with ``6 r`` times the cube of the depth-``(r-1)`` top-grad.

    ``holds`` on the report tells whether the inequality is met; nothing is raised.
    """
    if r < 1:
        raise InputError("radius must be at least 1")
    adm = adm_exact(g, r, budget)
    grad = top_grad_bruteforce(g, r - 1, budget)
    return AdmBoundReport(r=r, adm=adm, grad=grad, bound=6 * r * grad**3)
