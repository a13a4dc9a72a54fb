import itertools

import numpy as np
import pytest
from hypothesis import given

from helpers import GSTAR_PROJECTIONS, GSTAR_INVERSE, graph_and_vertex, mixed_graphs
from projpath import (
    MixedGraph,
    build_inverse_projection,
    build_projection,
    cycle_length,
    is_complete,
    is_vertex_complete,
    parse_bracket,
    replica_report,
    to_bracket,
)
from projpath.errors import (
    BracketSyntaxError,
    BudgetExceededError,
    DuplicateSiblingError,
    ProjPathError,
    RepeatOnPathError,
    SameBranchError,
)
from projpath.oracle import bfs_distances, closed_walk_length
from projpath.projection import Projection, ProjectionNode


def complete_graph(n):
    return MixedGraph(~np.eye(n, dtype=bool))


@pytest.mark.parametrize("u", sorted(GSTAR_PROJECTIONS))
def test_gstar_projections(gstar, u):
    assert to_bracket(build_projection(gstar, u)) == GSTAR_PROJECTIONS[u]


def test_inverse_projections(gstar):
    for u, text in GSTAR_INVERSE.items():
        assert to_bracket(build_inverse_projection(gstar, u)) == text
    # hand-checked against the columns of the adjacency matrix
    p3 = build_inverse_projection(gstar, 3)
    assert to_bracket(p3) == "3(2(1(4),8(5,6,7)),4(1(2),6(8)),5(8(2,6,7)))"
    assert p3.direction == "inverse"


def test_inverse_level_one(gstar):
    p = build_inverse_projection(gstar, 6, depth=1)
    assert [c.vertex for c in p.root.children] == [8]


def test_depth_limited_path():
    g = MixedGraph.from_edge_list(3, [(1, 2, "edge"), (2, 3, "edge")])
    p = build_projection(g, 1, depth=1)
    assert to_bracket(p) == "1(2)"
    assert 3 not in p.vertices()
    assert to_bracket(build_projection(g, 1, depth=0)) == "1"


def test_auto_depth_is_eccentricity(gstar):
    assert [build_projection(gstar, u).depth for u in gstar.vertices()] == [3, 2, 3, 4, 3, 2, 3, 2]
    assert [build_inverse_projection(gstar, u).depth for u in gstar.vertices()] == [
        3, 2, 3, 3, 4, 4, 3, 3,
    ]


def test_auto_depth_with_unreachable_vertex():
    g = MixedGraph.from_edge_list(3, [(1, 2, "arc")])
    assert to_bracket(build_projection(g, 1)) == "1(2)"
    assert to_bracket(build_projection(g, 3)) == "3"


def test_budget(gstar):
    with pytest.raises(BudgetExceededError):
        build_projection(gstar, 1, node_budget=12)
    assert build_projection(gstar, 1, node_budget=13).node_count() == 13
    with pytest.raises(ValueError):
        build_projection(gstar, 1, node_budget=0)
    with pytest.raises(ValueError):
        build_projection(gstar, 1, depth=-1)


def test_budget_guards_exponential_growth():
    with pytest.raises(BudgetExceededError):
        build_projection(complete_graph(10), 1, depth=9, node_budget=10**5)


def test_single_vertex_bracket():
    g = MixedGraph.from_adjacency_matrix("#")
    assert to_bracket(build_projection(g, 1)) == "1"


def test_undirected_inverse_equals_direct():
    g = MixedGraph.from_edge_list(5, [(1, 2, "edge"), (2, 3, "edge"), (3, 1, "edge"), (3, 4, "edge"), (4, 5, "edge")])
    for u in g.vertices():
        assert build_inverse_projection(g, u).root == build_projection(g, u).root


# parsing ------------------------------------------------------------------


def test_parse_p1(gstar):
    p = parse_bracket(GSTAR_PROJECTIONS[1])
    assert p.depth == 3
    assert len(p.levels()) == 4
    assert p.node_count() == 13
    assert p == build_projection(gstar, 1)


def test_parse_p7(gstar):
    assert parse_bracket(GSTAR_PROJECTIONS[7]) == build_projection(gstar, 7)


def test_parse_exhausted_marker():
    p = parse_bracket("8(2(1,3,7),5(3),6(4),7(0))")
    seven = p.root.children[-1]
    assert seven.vertex == 7 and seven.exhausted and seven.children == ()


def test_parse_ignores_whitespace():
    assert parse_bracket(" 1 (2 ,\n 3( 0 ) )") == parse_bracket("1(2,3(0))")


@pytest.mark.parametrize(
    "text, error, position",
    [
        ("1(2(1))", RepeatOnPathError, 4),
        ("1(2,2)", DuplicateSiblingError, 4),
        ("1(2", BracketSyntaxError, 3),
        ("1(,2)", BracketSyntaxError, 2),
        ("1(2)x", BracketSyntaxError, 4),
        ("0", BracketSyntaxError, 0),
        ("1(0,2)", BracketSyntaxError, 3),
        ("1()", BracketSyntaxError, 2),
        ("1(02)", BracketSyntaxError, 2),
        ("", BracketSyntaxError, 0),
    ],
)
def test_parse_errors(text, error, position):
    with pytest.raises(error) as info:
        parse_bracket(text)
    assert info.value.position == position


def test_parse_allows_repeats_across_branches():
    p = parse_bracket("1(2(3),3(2))")
    assert p.node_count() == 5


# replicas and cycles ------------------------------------------------------


def test_replicas_of_p1(gstar):
    report = replica_report(build_projection(gstar, 1))
    threes = report.instances[3]
    assert [(i.level, i.path) for i in threes] == [(2, (1, 2, 3)), (2, (1, 4, 3))]
    assert report.original(3).path == (1, 2, 3)
    assert [i.path for i in report.replicas(3)] == [(1, 4, 3)]


def test_replicas_of_p4(gstar):
    report = replica_report(build_projection(gstar, 4))
    twos = report.instances[2]
    assert [(i.level, i.path) for i in twos] == [(2, (4, 1, 2)), (2, (4, 3, 2))]
    assert report.original(2).path == (4, 1, 2)


def test_original_prefers_lower_level_over_left():
    report = replica_report(parse_bracket("1(2(3(4)),4)"))
    assert report.original(4).path == (1, 4)


def test_no_replicas():
    g = MixedGraph.from_edge_list(4, [(1, 2, "edge"), (1, 3, "edge"), (3, 4, "arc")])
    assert replica_report(build_projection(g, 1)).replicas() == []


def test_cycle_lengths(gstar):
    p = build_projection(gstar, 1)
    report = replica_report(p)
    a, b = report.instances[3]
    assert cycle_length(p, a, b) == 4
    assert cycle_length(p, (1, 2, 7), (1, 2, 8, 7)) == 3


def test_triangle_cycle():
    g = complete_graph(3)
    p = build_projection(g, 1, depth=2)
    assert cycle_length(p, (1, 2), (1, 3, 2)) == 3


def test_cycle_length_errors(gstar):
    p = build_projection(gstar, 1)
    with pytest.raises(ValueError):
        cycle_length(p, (1, 2, 3), (1, 4))
    with pytest.raises(ValueError):
        cycle_length(p, (1, 2, 3), (1, 2, 3))
    with pytest.raises(ProjPathError):
        cycle_length(p, (1, 2, 3), (1, 5, 3))
    # a hand-made tree breaking the simple-path invariant
    bad = Projection(
        1,
        ProjectionNode(1, 0, (ProjectionNode(2, 1, (ProjectionNode(2, 2),)),)),
        2,
    )
    with pytest.raises(SameBranchError):
        cycle_length(bad, (1, 2), (1, 2, 2))


@given(graph_and_vertex(max_n=6))
def test_cycle_length_matches_closed_walk(gu):
    g, u = gu
    p = build_projection(g, u)
    for group in replica_report(p).instances.values():
        for a, b in itertools.combinations(group, 2):
            assert cycle_length(p, a, b) == closed_walk_length(g, a.path, b.path)


# completeness -------------------------------------------------------------


def test_vertex_completeness(gstar):
    assert is_vertex_complete(build_projection(gstar, 1), gstar)
    assert not is_vertex_complete(build_projection(gstar, 1, depth=1), gstar)


def test_k3_complete_one_level_later():
    g = complete_graph(3)
    p1 = build_projection(g, 1, depth=1)
    p2 = build_projection(g, 1, depth=2)
    assert p1.depth == 1
    assert is_vertex_complete(p1, g) and not is_complete(p1, g)
    assert is_complete(p2, g)
    assert (2, 3) in p2.links() and (2, 3) not in p1.links()


def test_arc_into_base_is_never_shown(gstar):
    # arc 6 -> 4 cannot appear below base 4
    assert not is_complete(build_projection(gstar, 4, depth=7), gstar)


def test_inverse_completeness_follows_reversed_links():
    g = MixedGraph.from_edge_list(3, [(2, 1, "arc"), (3, 2, "arc")])
    p = build_inverse_projection(g, 1)
    assert to_bracket(p) == "1(2(3))"
    assert is_complete(p, g)
    assert not is_complete(build_projection(g.transpose(), 1), g)


# properties ---------------------------------------------------------------


@given(graph_and_vertex(max_n=7))
def test_root_paths_are_simple_and_follow_links(gu):
    g, u = gu
    for inverse in (False, True):
        p = (build_inverse_projection if inverse else build_projection)(g, u)
        for path, node in p.walk():
            assert len(set(path)) == len(path)
            assert node.level == len(path) - 1
            for a, b in zip(path, path[1:]):
                assert g.has_link(b, a) if inverse else g.has_link(a, b)


@given(graph_and_vertex(max_n=7))
def test_lowest_instance_sits_at_graph_distance(gu):
    g, u = gu
    p = build_projection(g, u)
    dist = bfs_distances(g, u)
    lowest = {}
    for _, node in p.walk():
        lowest.setdefault(node.vertex, node.level)
        lowest[node.vertex] = min(lowest[node.vertex], node.level)
    assert lowest == {v: d for v, d in enumerate(dist, start=1) if d is not None}


@given(graph_and_vertex(max_n=7))
def test_inverse_is_projection_of_transpose(gu):
    g, u = gu
    inv = build_inverse_projection(g, u)
    direct = build_projection(g.transpose(), u)
    assert inv.root == direct.root and inv.depth == direct.depth


@given(graph_and_vertex(max_n=7))
def test_bracket_round_trip(gu):
    g, u = gu
    p = build_projection(g, u)
    text = to_bracket(p)
    again = parse_bracket(text)
    assert again == p
    assert to_bracket(again) == text


@given(mixed_graphs(max_n=6))
def test_exhausted_only_below_depth(g):
    for u in g.vertices():
        p = build_projection(g, u)
        for _, node in p.walk():
            if node.exhausted:
                assert node.level < p.depth and not node.children
