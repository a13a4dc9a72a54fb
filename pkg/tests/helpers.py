"""Shared fixtures data and graph generators for the test-suite."""

from __future__ import annotations

import itertools
import random
from pathlib import Path

import numpy as np
from hypothesis import strategies as st

from projpath import MixedGraph
from projpath.bench import gen_random_mixed

DATA = Path(__file__).parent / "data"
GSTAR_TEXT = (DATA / "gstar.txt").read_text()

# PASS/FAIL lines from the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LOG: list[str] = []

GSTAR_PROJECTIONS = {
    1: "1(2(3(4),7(8),8(5,6,7)),4(3(2)))",
    2: "2(1(4),3(4),7(8),8(5,6,7))",
    3: "3(2(1(4),7(8),8(5,6,7)),4(1(2)))",
    4: "4(1(2(3(0),7(8),8(5,6,7))),3(2(1(0),7(8),8(5,6,7))))",
    5: "5(3(2(1,7,8),4(1)),8(2(1,3,7),6(4),7(0)))",
    6: "6(4(1,3),8(2,5,7))",
    7: "7(8(2(1,3),5(3),6(4)))",
    8: "8(2(1,3,7),5(3),6(4),7(0))",
}
GSTAR_INVERSE = {
    1: "1(2(3(4,5),8(5,6,7)),4(3(2,5),6(8)))",
    2: "2(1(4),3(4,5),8(5,6,7))",
}

# predecessor rows of every source; "," separates ties
GSTAR_SPM = {
    1: "# 1 2,4 1 8 8 2 2",
    2: "2 # 2 1,3 8 8 2 2",
    3: "2,4 3 # 3 8 8 2 2",
    4: "4 1,3 4 # 8 8 2 2",
    5: "2,4 3,8 5 3 # 8 8 5",
    6: "4 8 4 6 8 # 8 6",
    7: "2 8 2,5 6 8 8 # 7",
    8: "2 8 2,5 6 8 8 8 #",
}


def table_cells(line: str) -> dict[int, set[int]]:
    return {
        j: set() if cell == "#" else {int(x) for x in cell.split(",")}
        for j, cell in enumerate(line.split(), start=1)
    }


def gstar() -> MixedGraph:
    return MixedGraph.from_adjacency_matrix(GSTAR_TEXT)


def all_graphs_on(n: int):
    """Every mixed graph on ``n`` vertices (each ordered cell independently)."""
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in itertools.product((False, True), repeat=len(cells)):
        adj = np.zeros((n, n), dtype=bool)
        for (i, j), b in zip(cells, bits):
            adj[i, j] = b
        yield MixedGraph(adj)


def random_corpus(count: int = 500, max_n: int = 64, seed: int = 20240615):
    """Seeded ``(graph, source)`` pairs of varied size, density and arc share."""
    rng = random.Random(seed)
    for k in range(count):
        n = rng.randint(1, max_n)
        density = rng.choice([0.02, 0.05, 0.1, 0.2, 0.4, 0.7])
        arcs = rng.random()
        g = gen_random_mixed(n, density, arcs, [seed, k])
        yield g, rng.randint(1, n)


@st.composite
def mixed_graphs(draw, min_n: int = 1, max_n: int = 8) -> MixedGraph:
    n = draw(st.integers(min_n, max_n))
    adj = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            kind = draw(st.sampled_from(["none", "none", "edge", "fwd", "back"]))
            if kind in ("edge", "fwd"):
                adj[i, j] = True
            if kind in ("edge", "back"):
                adj[j, i] = True
    return MixedGraph(adj)


@st.composite
def graph_and_vertex(draw, min_n: int = 1, max_n: int = 8):
    g = draw(mixed_graphs(min_n, max_n))
    return g, draw(st.integers(1, g.n))
