import dataclasses

import numpy as np

from projpath import MixedGraph, build_refined
from projpath.oracle import (
    all_shortest_paths,
    assert_equivalence,
    bfs_distances,
    closed_walk_length,
    enumerate_shortest_paths,
    pred_sets,
)


def cycle_graph(n):
    return MixedGraph.from_edge_list(n, [(i, i % n + 1, "edge") for i in range(1, n + 1)])


def test_bfs_hand_checks(gstar):
    assert bfs_distances(gstar, 4) == [1, 2, 1, 0, 4, 4, 3, 3]
    assert bfs_distances(MixedGraph.from_adjacency_matrix("#"), 1) == [0]
    star = MixedGraph.from_edge_list(5, [(1, v, "edge") for v in range(2, 6)])
    assert bfs_distances(star, 1) == [0, 1, 1, 1, 1]
    path = MixedGraph.from_edge_list(4, [(1, 2, "edge"), (2, 3, "edge"), (3, 4, "edge")])
    assert bfs_distances(path, 1) == [0, 1, 2, 3]
    assert bfs_distances(cycle_graph(6), 1) == [0, 1, 2, 3, 2, 1]


def test_pred_sets_hand_checks():
    assert pred_sets(cycle_graph(6), 1)[3] == {3, 5}
    arcs = MixedGraph.from_edge_list(3, [(1, 2, "arc"), (3, 2, "arc")])
    assert pred_sets(arcs, 1) == [set(), {1}, set()]


def test_enumeration(gstar):
    assert enumerate_shortest_paths(gstar, 4, 5) == [(4, 1, 2, 8, 5), (4, 3, 2, 8, 5)]
    assert enumerate_shortest_paths(gstar, 6, 6) == [(6,)]
    assert enumerate_shortest_paths(MixedGraph(~np.eye(3, dtype=bool)), 1, 3) == [(1, 3)]
    assert enumerate_shortest_paths(cycle_graph(6), 1, 4) == [(1, 2, 3, 4), (1, 6, 5, 4)]
    assert enumerate_shortest_paths(MixedGraph.from_edge_list(2, [(1, 2, "arc")]), 2, 1) == []


def test_all_paths_agree_with_single_pair(gstar):
    for u in gstar.vertices():
        everything = all_shortest_paths(gstar, u)
        for v in gstar.vertices():
            assert everything[v] == enumerate_shortest_paths(gstar, u, v)


def test_closed_walk():
    g = MixedGraph(~np.eye(3, dtype=bool))
    assert closed_walk_length(g, (1, 2), (1, 3, 2)) == 3
    assert closed_walk_length(g, (1, 2), (1, 3)) is None
    sparse = MixedGraph.from_edge_list(3, [(1, 2, "edge"), (2, 3, "edge")])
    assert closed_walk_length(sparse, (1, 3), (1, 2, 3)) is None


def test_equivalence_on_gstar(gstar):
    for u in gstar.vertices():
        assert assert_equivalence(gstar, u).ok


def test_fault_injection_is_named(gstar):
    row = build_refined(gstar, 4)
    broken = dataclasses.replace(row, preds={**row.preds, 2: frozenset({1})})
    report = assert_equivalence(gstar, 4, row=broken)
    assert not report.ok
    assert report.divergence == "source 4: predecessors of 2 are [1], oracle [1, 3]"

    far = dataclasses.replace(row, dist={**row.dist, 5: 3})
    assert "distance to 5" in assert_equivalence(gstar, 4, row=far).divergence
