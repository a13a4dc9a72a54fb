"""Refined projections: shortest-path predecessor rows.

Only the instances of a vertex sitting at its lowest level in a projection lie
on shortest paths, so the refined tree can be grown directly level by level:
each level's vertices generate their neighbours minus the already-settled
(blocked) set, and every generating vertex is recorded as a predecessor.  The
whole refined tree then fits in one row ``B(u)`` whose cell ``j`` holds all
immediate predecessors of ``j`` on shortest ``u -> j`` paths.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError, RowFormatError
from .graph import MixedGraph
from .projection import DEFAULT_NODE_BUDGET, Projection, ProjectionNode


@dataclass(frozen=True)
class PredecessorRow:
    """Refined projection of one source, flattened into a row.

    ``preds[j]`` is the set of predecessors of ``j`` (empty for the source and
    for unreachable vertices), ``dist[j]`` the level at which ``j`` first
    appears or ``None`` if unreachable, ``reached`` the final blocked set.
    """

    source: int
    preds: dict[int, frozenset[int]]
    dist: dict[int, int | None]
    reached: frozenset[int]

    @property
    def n(self) -> int:
        return len(self.dist)

    def max_distance(self) -> int:
        return max(d for d in self.dist.values() if d is not None)

    def unreachable(self) -> list[int]:
        return [v for v, d in self.dist.items() if d is None]

    def successors(self) -> dict[int, list[int]]:
        """Children of each vertex in the refined tree, ascending."""
        out: dict[int, list[int]] = {v: [] for v in self.dist}
        for j in sorted(self.preds):
            for p in self.preds[j]:
                out[p].append(j)
        return out

    def to_text(self) -> str:
        return f"{self.source}: " + " ".join(
            format_cell(self, j) for j in range(1, self.n + 1)
        )


def format_cell(row: PredecessorRow, j: int) -> str:
    if j == row.source:
        return "#"
    if row.dist[j] is None:
        return "-"
    return "|".join(str(p) for p in sorted(row.preds[j]))


def build_refined(
    g: MixedGraph,
    u: int,
    *,
    stop_at: int | None = None,
    track_paths: bool = False,
) -> PredecessorRow:
    """Build ``B(u)`` level by level over the blocked-column mask.

    The loop ends once every vertex is blocked or a level comes out empty.
    With ``stop_at`` it also ends right after the level on which that vertex
    appears, so the row is exact for it and its ancestors only.

    ``track_paths`` additionally carries the forbidden root-path set of every
    shortest path and subtracts it when generating; those sets are always
    inside the blocked set, so the result is identical (used to check that).
    """
    g.check_vertex(u)
    if stop_at is not None:
        g.check_vertex(stop_at)
    n = g.n
    adj = g.adj
    s = u - 1
    blocked = np.zeros(n, dtype=bool)
    blocked[s] = True
    preds: list[set[int]] = [set() for _ in range(n)]
    dist: list[int | None] = [None] * n
    dist[s] = 0
    forbidden: dict[int, list[frozenset[int]]] = {s: [frozenset((s,))]}
    frontier = [s]
    settled = 1
    level = 0
    while frontier and settled < n:
        if stop_at is not None and dist[stop_at - 1] is not None:
            break
        level += 1
        generated: dict[int, list[int]] = {}
        for x in frontier:
            fresh = np.flatnonzero(adj[x] & ~blocked)
            if track_paths:
                fresh = sorted(
                    {int(y) for r in forbidden[x] for y in fresh if y not in r}
                )
            for y in fresh:
                generated.setdefault(int(y), []).append(x)
        for y, xs in generated.items():
            preds[y].update(xs)
            dist[y] = level
            blocked[y] = True
        if track_paths:
            forbidden = {
                y: [r | {y} for x in xs for r in forbidden[x]]
                for y, xs in generated.items()
            }
        frontier = sorted(generated)
        settled += len(generated)
    return PredecessorRow(
        source=u,
        preds={j + 1: frozenset(p + 1 for p in preds[j]) for j in range(n)},
        dist={j + 1: dist[j] for j in range(n)},
        reached=frozenset(int(j) + 1 for j in np.flatnonzero(blocked)),
    )


def row_from_text(text: str) -> PredecessorRow:
    """Parse ``"u: c_1 ... c_n"`` back into a row, recomputing distances."""
    head, sep, body = text.strip().partition(":")
    if not sep:
        raise RowFormatError(f"missing ':' in row {text!r}")
    try:
        source = int(head)
    except ValueError:
        raise RowFormatError(f"bad source label {head!r}") from None
    cells = body.split()
    n = len(cells)
    if not 1 <= source <= n:
        raise RowFormatError(f"source {source} outside 1..{n}")
    preds: dict[int, frozenset[int]] = {}
    for j, cell in enumerate(cells, start=1):
        if (cell == "#") != (j == source):
            raise RowFormatError(f"'#' must mark exactly the source cell, cell {j} is {cell!r}")
        if cell in ("#", "-"):
            preds[j] = frozenset()
            continue
        try:
            labels = [int(t) for t in cell.split("|")]
        except ValueError:
            raise RowFormatError(f"bad cell {cell!r} for vertex {j}") from None
        if any(not 1 <= p <= n or p == j for p in labels):
            raise RowFormatError(f"bad predecessor in cell {cell!r} for vertex {j}")
        preds[j] = frozenset(labels)
    return _row_from_preds(source, preds)


def _row_from_preds(source: int, preds: dict[int, frozenset[int]]) -> PredecessorRow:
    children: dict[int, list[int]] = {v: [] for v in preds}
    for j, ps in preds.items():
        for p in ps:
            children[p].append(j)
    dist: dict[int, int | None] = {v: None for v in preds}
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for x in frontier:
            for y in children[x]:
                if dist[y] is None:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    for j, ps in preds.items():
        if ps and any(dist[p] is None or dist[p] + 1 != dist[j] for p in ps):
            raise RowFormatError(f"predecessors of vertex {j} are not one level above it")
    return PredecessorRow(
        source=source,
        preds=preds,
        dist=dist,
        reached=frozenset(v for v, d in dist.items() if d is not None),
    )


# refined projection trees -------------------------------------------------


def refine_projection(p: Projection, g: MixedGraph | None = None) -> Projection:
    """Drop every instance above its vertex's lowest level, with its subtree.

    All instances at the lowest level are kept, so ties between shortest
    paths survive.  When ``g`` is given the tree's links are checked against it.
    """
    if g is not None:
        _check_links(p, g)
    lowest: dict[int, int] = {}
    for _, node in p.walk():
        lowest[node.vertex] = min(node.level, lowest.get(node.vertex, node.level))

    def prune(node: ProjectionNode) -> ProjectionNode:
        kept = tuple(prune(c) for c in node.children if c.level == lowest[c.vertex])
        return ProjectionNode(node.vertex, node.level, kept, node.exhausted)

    return Projection(p.base, prune(p.root), p.depth, p.direction)


def _check_links(p: Projection, g: MixedGraph) -> None:
    for parent, child in p.links():
        ok = g.has_link(child, parent) if p.direction == "inverse" else g.has_link(parent, child)
        if not ok:
            raise ValueError(f"link {parent}->{child} of the projection is not in the graph")


def row_from_refined(p: Projection, n: int | None = None) -> PredecessorRow:
    """Read the predecessor row off a refined tree.

    ``n`` defaults to the largest label in the tree; vertices absent from the
    tree are unreachable.
    """
    if n is None:
        n = max(p.vertices())
    preds: dict[int, set[int]] = {j: set() for j in range(1, n + 1)}
    dist: dict[int, int | None] = {j: None for j in range(1, n + 1)}
    for path, node in p.walk():
        if dist[node.vertex] is None:
            dist[node.vertex] = node.level
        if len(path) > 1:
            preds[node.vertex].add(path[-2])
    return PredecessorRow(
        source=p.base,
        preds={j: frozenset(ps) for j, ps in preds.items()},
        dist=dist,
        reached=frozenset(v for v, d in dist.items() if d is not None),
    )


def refined_from_row(
    row: PredecessorRow, g: MixedGraph, node_budget: int = DEFAULT_NODE_BUDGET
) -> Projection:
    """Expand a row into its refined tree: one root path per shortest path.

    ``g`` must be the graph the row was built on; it decides which nodes are
    marked exhausted (no simple continuation below the depth bound).
    """
    depth = row.max_distance()
    succ = row.successors()
    count = 1

    def expand(v: int, level: int, on_path: frozenset[int]) -> ProjectionNode:
        nonlocal count
        kids = succ[v]
        count += len(kids)
        if count > node_budget:
            raise BudgetExceededError(
                f"refined tree from {row.source} exceeds node budget {node_budget}"
            )
        on_path = on_path | {v}
        exhausted = level < depth and all(w in on_path for w in g.out_neighbors(v))
        children = tuple(expand(w, level + 1, on_path) for w in kids)
        return ProjectionNode(v, level, children, exhausted and not children)

    return Projection(row.source, expand(row.source, 0, frozenset()), depth)


# eccentricity metrics -----------------------------------------------------


@dataclass(frozen=True)
class NotStronglyReachable:
    """Returned instead of a number when some distance is infinite.

    ``unreachable`` lists ``(from, to)`` pairs with no path; ``finite_max`` is
    the largest finite distance seen.
    """

    unreachable: frozenset[tuple[int, int]]
    finite_max: int


def eccentricity(g: MixedGraph, u: int) -> int | NotStronglyReachable:
    row = build_refined(g, u)
    missing = row.unreachable()
    if missing:
        return NotStronglyReachable(frozenset((u, v) for v in missing), row.max_distance())
    return row.max_distance()


def inverse_eccentricity(g: MixedGraph, u: int) -> int | NotStronglyReachable:
    """Largest distance into ``u`` from any other vertex."""
    row = build_refined(g.transpose(), u)
    missing = row.unreachable()
    if missing:
        return NotStronglyReachable(frozenset((v, u) for v in missing), row.max_distance())
    return row.max_distance()


def _maximum(values: list[int | NotStronglyReachable]) -> int | NotStronglyReachable:
    bad = [v for v in values if isinstance(v, NotStronglyReachable)]
    finite = max(
        (v.finite_max if isinstance(v, NotStronglyReachable) else v for v in values),
        default=0,
    )
    if bad:
        return NotStronglyReachable(frozenset().union(*(b.unreachable for b in bad)), finite)
    return finite


def diameter(g: MixedGraph) -> int | NotStronglyReachable:
    return _maximum([eccentricity(g, u) for u in g.vertices()])


def inverse_diameter(g: MixedGraph) -> int | NotStronglyReachable:
    return _maximum([inverse_eccentricity(g, u) for u in g.vertices()])
