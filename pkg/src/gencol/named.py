"""Named graphs: small cages stored as literal edge lists, plus parametric families."""

from __future__ import annotations

import re

from gencol.errors import InputError
from gencol.graph import Graph, girth

# name -> (n, degree, girth, edges)
CAGES = {
    "petersen": (
        10, 3, 5,
        (
        (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (3, 8), (4, 9),
        (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
        ),
    ),
    "heawood": (
        14, 3, 6,
        (
        (0, 1), (0, 5), (0, 13), (1, 2), (1, 10), (2, 3), (2, 7), (3, 4), (3, 12),
        (4, 5), (4, 9), (5, 6), (6, 7), (6, 11), (7, 8), (8, 9), (8, 13), (9, 10),
        (10, 11), (11, 12), (12, 13),
        ),
    ),
    "mcgee": (
        24, 3, 7,
        (
        (0, 1), (0, 12), (0, 23), (1, 2), (1, 8), (2, 3), (2, 19), (3, 4), (3, 15),
        (4, 5), (4, 11), (5, 6), (5, 22), (6, 7), (6, 18), (7, 8), (7, 14), (8, 9),
        (9, 10), (9, 21), (10, 11), (10, 17), (11, 12), (12, 13), (13, 14), (13, 20),
        (14, 15), (15, 16), (16, 17), (16, 23), (17, 18), (18, 19), (19, 20), (20, 21),
        (21, 22), (22, 23),
        ),
    ),
    "robertson": (
        19, 4, 5,
        (
        (0, 1), (0, 8), (0, 12), (0, 18), (1, 2), (1, 5), (1, 16), (2, 3), (2, 9),
        (2, 13), (3, 4), (3, 7), (3, 18), (4, 5), (4, 12), (4, 15), (5, 6), (5, 10),
        (6, 7), (6, 13), (6, 17), (7, 8), (7, 11), (8, 9), (8, 15), (9, 10), (9, 17),
        (10, 11), (10, 14), (11, 12), (11, 16), (12, 13), (13, 14), (14, 15), (14, 18),
        (15, 16), (16, 17), (17, 18),
        ),
    ),
    "tutte_coxeter": (
        30, 3, 8,
        (
        (0, 1), (0, 17), (0, 29), (1, 2), (1, 22), (2, 3), (2, 9), (3, 4), (3, 26),
        (4, 5), (4, 13), (5, 6), (5, 18), (6, 7), (6, 23), (7, 8), (7, 28), (8, 9),
        (8, 15), (9, 10), (10, 11), (10, 19), (11, 12), (11, 24), (12, 13), (12, 29),
        (13, 14), (14, 15), (14, 21), (15, 16), (16, 17), (16, 25), (17, 18), (18, 19),
        (19, 20), (20, 21), (20, 27), (21, 22), (22, 23), (23, 24), (24, 25), (25, 26),
        (26, 27), (27, 28), (28, 29),
        ),
    ),
    "levi_pg23": (
        26, 4, 6,
        (
        (0, 14), (0, 17), (0, 20), (0, 23), (1, 13), (1, 17), (1, 18), (1, 19),
        (2, 16), (2, 17), (2, 22), (2, 24), (3, 15), (3, 17), (3, 21), (3, 25),
        (4, 13), (4, 14), (4, 15), (4, 16), (5, 14), (5, 19), (5, 22), (5, 25),
        (6, 14), (6, 18), (6, 21), (6, 24), (7, 13), (7, 23), (7, 24), (7, 25),
        (8, 16), (8, 19), (8, 21), (8, 23), (9, 15), (9, 18), (9, 22), (9, 23),
        (10, 13), (10, 20), (10, 21), (10, 22), (11, 15), (11, 19), (11, 20), (11, 24),
        (12, 16), (12, 18), (12, 20), (12, 25),
        ),
    ),
}

_PARAM = re.compile(r"^([a-z_]+)\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)$")


def clique(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def cage(name: str) -> Graph:
    n, degree, expected_girth, edges = CAGES[name]
    g = Graph(n, edges)
    if __debug__:
        if set(g.degrees()) != {degree} or girth(g) != expected_girth:
            raise AssertionError(f"embedded {name} graph is corrupt")
    return g


_FAMILIES = {
    "clique": (clique, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
}


def named_graph(name: str) -> Graph:
    """Look up ``petersen``, ``heawood``, ... or a family such as ``cycle(6)``."""
    key = name.strip().lower()
    if key in CAGES:
        return cage(key)
    match = _PARAM.match(key)
    if match:
        family, a, b = match.groups()
        if family in _FAMILIES:
            fn, arity = _FAMILIES[family]
            args = [int(a)] + ([int(b)] if b is not None else [])
            if len(args) != arity:
                raise InputError(f"{family} takes {arity} parameter(s)")
            return fn(*args)
    known = sorted(CAGES) + [f"{f}(...)" for f in _FAMILIES]
    raise InputError(f"unknown graph name {name!r}; known: {', '.join(known)}")
