import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import adjacency, graphs
from gencol.errors import InputError
from gencol.exact import treewidth_small
from gencol.graph import Graph
from gencol.named import named_graph
from gencol.random_graphs import random_partial_ktree
from gencol.reach import eval_wcol
from gencol.treedec import (
    TreeDecomposition,
    binomial_certificate,
    decomposition_from_elimination,
    format_td,
    is_smooth,
    make_smooth,
    parse_td,
    read_td,
    small_decomposition,
    td_order,
    validate_td,
    write_td,
)


def path_decomposition(n):
    return TreeDecomposition.from_edges(
        [{i, i + 1} for i in range(n - 1)], [(i, i + 1) for i in range(n - 2)]
    )


def tree_decomposition(g, root=0):
    """One node per vertex holding it and its BFS parent."""
    dist = oracles.bfs_dist(adjacency(g), root)
    parent = {root: -1}
    for v in sorted(dist, key=dist.get):
        for u in g.adj[v]:
            parent.setdefault(u, v)
    bags = [{v} if parent[v] < 0 else {v, parent[v]} for v in range(g.n)]
    return TreeDecomposition(tuple(map(frozenset, bags)), tuple(parent[v] for v in range(g.n)), root, True)


def random_tree(n, rng):
    return Graph(n, [(rng.randrange(v), v) for v in range(1, n)])


class TestValidation:
    def test_path(self):
        report = validate_td(named_graph("path(6)"), path_decomposition(6))
        assert report.valid and report.width == 1 and report.smooth

    def test_missing_edge(self):
        g = named_graph("cycle(4)")
        td = TreeDecomposition.from_edges([{0, 1}, {1, 2}, {2, 3}], [(0, 1), (1, 2)])
        report = validate_td(g, td)
        assert not report.valid and report.uncovered_edge == (0, 3)

    def test_cycle_four_width_two(self):
        td = TreeDecomposition.from_edges([{0, 1, 2}, {0, 2, 3}], [(0, 1)])
        report = validate_td(named_graph("cycle(4)"), td)
        assert report.valid and report.width == 2

    def test_missing_vertex(self):
        report = validate_td(Graph(3, [(0, 1)]), TreeDecomposition.from_edges([{0, 1}], []))
        assert not report and report.uncovered_vertex == 2

    def test_disconnected_occurrence(self):
        td = TreeDecomposition.from_edges([{0, 1}, {1, 2}, {0, 2}], [(0, 1), (1, 2)])
        report = validate_td(named_graph("clique(3)"), td)
        assert not report.valid and report.disconnected_vertex == 0

    def test_wrong_flag(self):
        td = TreeDecomposition.from_edges([{0, 1}, {2, 3}, {1, 2}], [(0, 2), (2, 1)], smooth=False)
        assert is_smooth(td) and not validate_td(named_graph("path(4)"), td).valid
        fake = TreeDecomposition(td.bags, td.parent, td.root, smooth=True)
        coarse = TreeDecomposition.from_edges([{0, 1, 2}, {2, 3, 4}], [(0, 1)])
        assert validate_td(named_graph("path(4)"), fake).valid
        wrong = TreeDecomposition(coarse.bags, coarse.parent, 0, smooth=True)
        assert not validate_td(named_graph("path(5)"), wrong).valid

    def test_vertex_out_of_range(self):
        assert not validate_td(Graph(2), TreeDecomposition.from_edges([{0, 5}], []))

    @pytest.mark.parametrize(
        "bags, edges",
        [([], []), ([{0}, {0}], []), ([{0}, {0}], [(0, 0)]), ([{0}, {0}, {0}], [(0, 1), (1, 0)])],
    )
    def test_structure_errors(self, bags, edges):
        with pytest.raises(InputError):
            TreeDecomposition.from_edges(bags, edges)

    def test_bad_parent_links(self):
        with pytest.raises(InputError):
            TreeDecomposition((frozenset(), frozenset()), (1, 0))


class TestSmoothing:
    def test_smooth_input_unchanged(self):
        td = path_decomposition(5)
        assert make_smooth(named_graph("path(5)"), td) is td

    def test_single_interpolated_bag(self):
        two = TreeDecomposition.from_edges([{0, 1, 2}, {2, 3, 4}], [(0, 1)])
        out = make_smooth(named_graph("path(5)"), two)
        assert out.num_nodes == 3 and out.width == 2 and out.smooth
        assert {0, 1, 2} in out.bags and {2, 3, 4} in out.bags

    def test_duplicates_merged(self):
        jumpy = TreeDecomposition.from_edges([{0, 1, 4}, {0, 1, 4}, {2, 3, 4}], [(0, 1), (1, 2)])
        g = Graph(5, [(0, 1), (1, 4), (2, 3), (3, 4)])
        out = make_smooth(g, jumpy)
        assert out.smooth and validate_td(g, out).valid
        # the duplicate collapses; one bag is interpolated on the remaining edge
        assert out.num_nodes == 3
        assert out.bags.count(frozenset({0, 1, 4})) == 1

    def test_invalid_input(self):
        td = TreeDecomposition.from_edges([{0, 1}], [])
        with pytest.raises(InputError):
            make_smooth(named_graph("path(3)"), td)

    @pytest.mark.parametrize("seed", range(8))
    def test_elimination_decompositions(self, seed):
        rng = random.Random(seed)
        g, _ = random_partial_ktree(12, 2, rng)
        seq = list(range(g.n))
        rng.shuffle(seq)
        td = decomposition_from_elimination(g, seq)
        assert validate_td(g, td).valid
        assert td.width == oracles.elimination_width(adjacency(g), seq)
        out = make_smooth(g, td)
        assert validate_td(g, out).valid and out.smooth and out.width == td.width

    @given(graphs(min_n=1, max_n=7), st.randoms(use_true_random=False))
    def test_elimination_property(self, g, rng):
        seq = list(range(g.n))
        rng.shuffle(seq)
        out = make_smooth(g, decomposition_from_elimination(g, seq))
        assert validate_td(g, out, separator_samples=out.num_nodes).valid
        assert out.width == oracles.elimination_width(adjacency(g), seq)

    def test_small_decomposition_is_optimal(self):
        g = named_graph("petersen")
        td = small_decomposition(g)
        assert validate_td(g, td).valid and td.width == treewidth_small(g) == 4


class TestBagOrder:
    def test_star_centre_first(self):
        g = named_graph("star(4)")
        td = TreeDecomposition.from_edges([{0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}], [(0, i) for i in range(1, 5)])
        assert td_order(g, td).seq[0] == 0

    def test_path_from_one_end(self):
        assert td_order(named_graph("path(5)"), path_decomposition(5)).seq == (0, 1, 2, 3, 4)

    def test_path_reversed_root(self):
        g = named_graph("path(5)")
        assert td_order(g, path_decomposition(5), root=3).seq == (3, 4, 2, 1, 0)

    def test_rejects_non_smooth(self):
        td = TreeDecomposition.from_edges([{0, 1, 2}, {2, 3, 4}], [(0, 1)])
        with pytest.raises(InputError):
            td_order(named_graph("path(5)"), td)

    def test_partial_two_tree(self):
        g, td = random_partial_ktree(30, 2, 3)
        assert eval_wcol(g, td_order(g, td), 3) <= comb(5, 2)

    @pytest.mark.parametrize("seed", range(6))
    def test_trees(self, seed):
        rng = random.Random(seed)
        g = random_tree(25, rng)
        td = tree_decomposition(g)
        for r in range(1, 6):
            cert = binomial_certificate(g, td, r)
            assert cert.width == 1 and cert.wcol <= r + 1 == cert.bound

    @pytest.mark.parametrize("k", [1, 3, 5])
    def test_clique_single_bag(self, k):
        g = named_graph(f"clique({k + 1})")
        td = TreeDecomposition.from_edges([set(range(k + 1))], [])
        for r in (1, 2, 4):
            cert = binomial_certificate(g, td, r)
            assert cert.wcol == k + 1 <= cert.bound

    def test_partial_three_tree(self):
        g, td = random_partial_ktree(40, 3, 2024)
        cert = binomial_certificate(g, td, 4)
        assert cert.bound == 35 and cert.wcol <= 35

    @pytest.mark.parametrize("seed", range(10))
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_bound_on_random_partial_ktrees(self, seed, k):
        g, td = random_partial_ktree(35, k, seed, keep=0.7)
        for r in range(1, 5):
            assert binomial_certificate(g, td, r).wcol <= comb(r + k, k)

    def test_negative_radius(self):
        with pytest.raises(InputError):
            binomial_certificate(named_graph("path(5)"), path_decomposition(5), -1)


class TestFiles:
    def test_format(self):
        text = format_td(path_decomposition(3), 3)
        assert text == "s td 2 2 3\nb 1 0 1\nb 2 1 2\n1 2\n"

    @pytest.mark.parametrize("seed", range(4))
    def test_roundtrip(self, seed, tmp_path):
        g, td = random_partial_ktree(20, 2, seed)
        write_td(td, g.n, tmp_path / "x.td")
        back, n = read_td(tmp_path / "x.td")
        assert n == g.n
        assert back == td.relabelled()
        assert validate_td(g, back).valid

    def test_comments_and_root(self):
        td, n = parse_td("c hello\ns td 2 2 3\nb 2 1 2\nb 1 0 1\n2 1\n")
        assert n == 3 and td.bags[td.root] == {0, 1}

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "b 1 0\n",
            "s td 1 1 2\nb 1 0\nb 1 1\n",
            "s td 1 2 2\nb 1 0\n",
            "s td 1 1 2\nb 1 7\n",
            "s td 2 1 2\nb 1 0\n",
            "s td 1 2 2\nb 1 0 0\n",
            "s td 1 1 2\nb 1 x\n",
            "s td 2 1 2\nb 1 0\nb 2 1\n",
        ],
    )
    def test_rejects_bad_files(self, text):
        with pytest.raises(InputError):
            parse_td(text)
