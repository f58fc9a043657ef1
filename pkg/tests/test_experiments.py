from fractions import Fraction

import pytest

import oracles
from conftest import adjacency
from gencol.errors import InputError
from gencol.experiments import cauchy_check, girth_lb, girth_lb_bound, heuristic_orders
from gencol.graph import Graph
from gencol.named import named_graph
from gencol.random_graphs import random_order
from gencol.reach import profile


def strong_layer_totals(g, order, r):
    adj = adjacency(g)
    totals = [0] * (r + 1)
    for v in range(g.n):
        prev = set()
        for i in range(r + 1):
            cur = oracles.sreach(adj, order.rank, v, i)
            totals[i] += len(cur - prev)
            prev = cur
    return totals


class TestBound:
    def test_values(self):
        assert girth_lb_bound(4, 2) == 5
        assert girth_lb_bound(4, 1) == 2
        assert girth_lb_bound(6, 1) == 3

    def test_degree_too_small(self):
        with pytest.raises(InputError):
            girth_lb_bound(3, 1)


class TestGirthLowerBound:
    def test_robertson_radius_two(self):
        report = girth_lb(named_graph("robertson"), 2, samples=100, seed=0)
        assert report.holds and report.bound == 5
        assert report.min_value >= 5
        assert [row.label for row in report.rows[:3]] == ["degeneracy", "identity", "greedy-adm"]
        assert len(report.rows) == 103

    def test_radius_one_is_equality(self):
        report = girth_lb(named_graph("robertson"), 1, samples=30)
        assert all(row.value == 2 for row in report.rows)

    def test_matches_brute_force(self):
        g = named_graph("robertson")
        adj = adjacency(g)
        for seed in range(3):
            order = random_order(g.n, seed)
            total = sum(len(oracles.wreach(adj, order.rank, v, 2)) - 1 for v in range(g.n))
            assert profile(g, order, 2).W(2) == Fraction(total, g.n)

    @pytest.mark.parametrize("name, r", [("cycle(8)", 1), ("petersen", 1), ("robertson", 3)])
    def test_preconditions(self, name, r):
        with pytest.raises(InputError):
            girth_lb(named_graph(name), r, samples=1)

    def test_irregular(self):
        with pytest.raises(InputError):
            girth_lb(named_graph("star(4)"), 1, samples=1)

    def test_seed_reproducible_and_pool_independent(self):
        g = named_graph("robertson")
        a = girth_lb(g, 2, samples=20, seed=5)
        b = girth_lb(g, 2, samples=20, seed=5, jobs=2)
        assert a.rows == b.rows
        assert girth_lb(g, 2, samples=20, seed=6).rows != a.rows


class TestCauchy:
    @pytest.mark.parametrize("name", ["petersen", "mcgee"])
    def test_holds(self, name):
        report = cauchy_check(named_graph(name), 1, samples=100, seed=1)
        assert report.holds and len(report.rows) == 103

    def test_edgeless(self):
        report = cauchy_check(Graph(4), 1, samples=5)
        assert all(row.value == 0 == row.bound for row in report.rows)

    def test_girth_precondition(self):
        with pytest.raises(InputError):
            cauchy_check(named_graph("petersen"), 2, samples=1)

    def test_layers_match_brute_force(self):
        g = named_graph("petersen")
        for seed in range(3):
            order = random_order(g.n, seed)
            assert profile(g, order, 2).U == strong_layer_totals(g, order, 2)


def test_heuristic_orders_cover_the_graph():
    g = named_graph("petersen")
    orders = heuristic_orders(g, 2)
    assert set(orders) == {"degeneracy", "identity", "greedy-adm"}
    assert all(sorted(o.seq) == list(range(10)) for o in orders.values())
    assert set(heuristic_orders(g, 0)) == {"degeneracy", "identity"}
