"""Sampling experiments for lower bounds on regular graphs of large girth.

Both checks are per-order statements, so each sampled order is a test case.
Comparisons use exact fractions.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from gencol.errors import InputError, InvariantViolation
from gencol.graph import Graph, girth
from gencol.heuristics import degeneracy_order, greedy_adm_order
from gencol.random_graphs import random_order
from gencol.reach import LinearOrder, profile


def heuristic_orders(g: Graph, r: int) -> dict[str, LinearOrder]:
    orders = {"degeneracy": degeneracy_order(g), "identity": LinearOrder.identity(g.n)}
    if r >= 1:
        orders["greedy-adm"] = greedy_adm_order(g, r)
    return orders


def _orders(g: Graph, r: int, samples: int, seed: int):
    """Heuristic orders first, then ``samples`` uniform orders from one seeded stream."""
    yield from heuristic_orders(g, r).items()
    rng = random.Random(seed)
    for i in range(samples):
        yield f"random-{i}", random_order(g.n, rng)


def _mean_weak(task) -> Fraction:
    g, order, r = task
    return profile(g, order, r).W(r)


def _strong_layers(task) -> list[int]:
    g, order, r = task
    return profile(g, order, 2 * r).U


def _evaluate(fn, g: Graph, orders: list, r: int, jobs: int) -> list:
    """Apply ``fn`` to every order; results keep the order of ``orders``."""
    tasks = [(g, order, r) for _, order in orders]
    if jobs <= 1 or len(tasks) < 2:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def girth_lb_bound(d: int, r: int) -> Fraction:
    """``d/(d-3) * (((d-1)/2)^r - 1)``: the least mean weak ``r``-reach (self excluded)
    any order can have on a ``d``-regular graph of girth at least ``2r + 1``."""
    if d < 4:
        raise InputError("degree must be at least 4")
    return Fraction(d, d - 3) * (Fraction(d - 1, 2) ** r - 1)


@dataclass
class SampleRow:
    label: str
    value: Fraction
    bound: Fraction

    @property
    def slack(self) -> Fraction:
        return self.value - self.bound


@dataclass
class ExperimentReport:
    name: str
    params: dict
    bound: Fraction | None
    rows: list[SampleRow] = field(default_factory=list)

    @property
    def min_value(self) -> Fraction:
        return min(row.value for row in self.rows)

    @property
    def min_slack(self) -> Fraction:
        return min(row.slack for row in self.rows)

    @property
    def holds(self) -> bool:
        return all(row.slack >= 0 for row in self.rows)


def _regular_degree(g: Graph) -> int:
    degs = set(g.degrees())
    if len(degs) != 1:
        raise InputError("graph is not regular")
    return degs.pop()


def girth_lb(
    g: Graph, r: int, samples: int = 1000, seed: int = 0, *, strict: bool = True, jobs: int = 1
) -> ExperimentReport:
    """Mean weak ``r``-reach of every tried order against the regular-girth bound."""
    if r < 1:
        raise InputError("radius must be at least 1")
    d = _regular_degree(g)
    if d < 4:
        raise InputError(f"graph is {d}-regular; the bound needs degree at least 4")
    gg = girth(g)
    if gg < 2 * r + 1:
        raise InputError(f"girth {gg} is below {2 * r + 1}")
    bound = girth_lb_bound(d, r)
    report = ExperimentReport("girth-lb", {"r": r, "d": d, "samples": samples, "seed": seed}, bound)
    orders = list(_orders(g, r, samples, seed))
    for (label, _), value in zip(orders, _evaluate(_mean_weak, g, orders, r, jobs)):
        report.rows.append(SampleRow(label, value, bound))
        if strict and value < bound:
            raise InvariantViolation(f"order {label}: mean weak reach {value} < {bound}")
    return report


def cauchy_check(
    g: Graph, r: int, samples: int = 1000, seed: int = 0, *, strict: bool = True, jobs: int = 1
) -> ExperimentReport:
    """``U_{2r} >= U_r^2 / (2n) - U_r / 2`` for every tried order, where ``U_i``
    counts pairs at exactly strong distance layer ``i``."""
    if r < 1:
        raise InputError("radius must be at least 1")
    gg = girth(g)
    if gg < 4 * r + 1:
        raise InputError(f"girth {gg} is below {4 * r + 1}")
    n = g.n
    report = ExperimentReport("cauchy", {"r": r, "samples": samples, "seed": seed}, None)
    orders = list(_orders(g, r, samples, seed))
    for (label, _), U in zip(orders, _evaluate(_strong_layers, g, orders, r, jobs)):
        rhs = Fraction(U[r] ** 2, 2 * n) - Fraction(U[r], 2)
        report.rows.append(SampleRow(label, Fraction(U[2 * r]), rhs))
        if strict and U[2 * r] < rhs:
            raise InvariantViolation(f"order {label}: U_{2 * r} = {U[2 * r]} < {rhs}")
    return report
