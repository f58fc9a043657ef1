from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gencol.graph import Graph
from gencol.reach import LinearOrder

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def graphs_with_order(draw, min_n=1, max_n=7):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    seq = draw(st.permutations(range(g.n)))
    return g, LinearOrder.from_sequence(seq)


def adjacency(g):
    return [list(a) for a in g.adj]


# -- acceptance summary --------------------------------------------------------------

ACCEPTANCE_LINES: dict = {}


@pytest.fixture
def acceptance_record():
    def record(number, passed, detail):
        ACCEPTANCE_LINES[number] = (passed, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        passed, detail = ACCEPTANCE_LINES[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}")
