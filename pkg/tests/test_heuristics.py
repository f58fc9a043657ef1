import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import adjacency, graphs
from gencol.errors import InputError
from gencol.exact import adm_exact, degeneracy
from gencol.graph import Graph
from gencol.heuristics import b_r, degeneracy_order, greedy_adm_order, peel
from gencol.named import named_graph
from gencol.random_graphs import random_partial_ktree
from gencol.reach import eval_adm, eval_wcol


class TestBr:
    def test_triangle(self):
        assert b_r(named_graph("clique(3)"), {0, 1, 2}, 0, 1) == 3

    def test_path_through_outside_vertex(self):
        assert b_r(named_graph("path(3)"), {0, 2}, 0, 2) == 2

    def test_cycle_pair_at_distance_two(self):
        # both sides end at 2, so at most one of them can be used
        assert b_r(named_graph("cycle(5)"), {0, 2}, 0, 2) == 2
        assert b_r(named_graph("cycle(5)"), {0, 2}, 0, 3) == 2
        assert b_r(named_graph("cycle(5)"), {0, 2, 3}, 0, 2) == 3

    def test_vertex_outside_set(self):
        with pytest.raises(InputError):
            b_r(named_graph("path(3)"), {1, 2}, 0, 2)

    @given(graphs(min_n=1, max_n=6), st.integers(0, 4), st.data())
    def test_matches_oracle(self, g, r, data):
        S = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
        v = data.draw(st.sampled_from(sorted(S)))
        got = b_r(g, S, v, r)
        assert got == oracles.b_r(adjacency(g), S, v, r)
        if r >= 1 and S == set(range(g.n)):
            assert got == 1 + g.degree(v)
        assert got <= 1 + g.degree(v)


class TestGreedyAdm:
    def test_rejects_radius_zero(self):
        with pytest.raises(InputError):
            greedy_adm_order(named_graph("path(3)"), 0)

    @pytest.mark.parametrize("n", [3, 4, 6])
    @pytest.mark.parametrize("r", [1, 3])
    def test_clique(self, n, r):
        g = named_graph(f"clique({n})")
        assert eval_adm(g, greedy_adm_order(g, r), r) == n

    def test_c5(self):
        g = named_graph("cycle(5)")
        assert eval_adm(g, greedy_adm_order(g, 2), 2) == 3 == adm_exact(g, 2)

    @pytest.mark.parametrize("name", ["path(6)", "star(5)"])
    def test_trees(self, name):
        g = named_graph(name)
        assert eval_adm(g, greedy_adm_order(g, 1), 1) == 2 == adm_exact(g, 1)

    @given(graphs(min_n=1, max_n=7), st.integers(1, 3))
    def test_certificate(self, g, r):
        trace = []
        order = greedy_adm_order(g, r, trace)
        got = eval_adm(g, order, r)
        assert got == max(val for _, val in trace)
        assert got >= adm_exact(g, r)
        # the trace lists vertices from the top rank downwards
        assert [v for v, _ in trace] == list(reversed(order.seq))


class TestDegeneracyOrder:
    @pytest.mark.parametrize(
        "name, expected", [("path(5)", 2), ("clique(4)", 4), ("petersen", 4), ("cycle(6)", 3)]
    )
    def test_examples(self, name, expected):
        g = named_graph(name)
        assert eval_wcol(g, degeneracy_order(g), 1) == expected

    def test_peeled_first_ranks_last(self):
        g = named_graph("star(3)")
        seq, worst = peel(g)
        assert seq[0] == 1 and worst == 1
        assert degeneracy_order(g).seq[-1] == seq[0]

    @given(graphs())
    def test_back_degree(self, g):
        order = degeneracy_order(g)
        d = oracles.degeneracy(adjacency(g))
        assert degeneracy(g) == d
        assert eval_wcol(g, order, 1) == d + 1 if g.n else eval_wcol(g, order, 1) == 0

    def test_partial_ktree(self):
        g, _ = random_partial_ktree(40, 3, 5, keep=1.0)
        assert eval_wcol(g, degeneracy_order(g), 1) == 4

    def test_edgeless(self):
        assert eval_wcol(Graph(3), degeneracy_order(Graph(3)), 1) == 1
