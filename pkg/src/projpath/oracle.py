"""Brute-force reference answers.

Everything here works straight off the adjacency relation with a queue-based
traversal or exhaustive depth-first enumeration, and shares no code with the
refined search it is used to check.  Enumeration is exponential; keep it to
small graphs (n <= 12).
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .graph import MixedGraph


def _rows(g: MixedGraph) -> list[list[int]]:
    return [[j for j, x in enumerate(row) if x] for row in g.adj.tolist()]


def bfs_distances(g: MixedGraph, u: int) -> list[int | None]:
    """Distances from ``u`` indexed by ``label - 1``; ``None`` when unreachable."""
    g.check_vertex(u)
    dist: list[int | None] = [None] * g.n
    dist[u - 1] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.out_neighbors(x):
            if dist[y - 1] is None:
                dist[y - 1] = dist[x - 1] + 1
                queue.append(y)
    return dist


def pred_sets(g: MixedGraph, u: int) -> list[set[int]]:
    """``{p : p -> j and d(p) + 1 = d(j)}`` for each ``j`` (labels, 1-based)."""
    dist = bfs_distances(g, u)
    adj = g.adj.tolist()
    out = []
    for j in range(g.n):
        out.append(
            {
                p + 1
                for p in range(g.n)
                if adj[p][j] and dist[p] is not None and dist[j] == dist[p] + 1
            }
        )
    return out


def all_shortest_paths(g: MixedGraph, u: int) -> dict[int, list[tuple[int, ...]]]:
    """Every minimum-length simple path from ``u`` to each vertex, sorted."""
    rows = _rows(g)
    dist = bfs_distances(g, u)
    limit = max(d for d in dist if d is not None)
    found: dict[int, list[tuple[int, ...]]] = {v: [] for v in g.vertices()}
    path = [u - 1]
    on_path = {u - 1}

    def dfs() -> None:
        x = path[-1]
        if len(path) - 1 == dist[x]:
            found[x + 1].append(tuple(p + 1 for p in path))
        if len(path) - 1 == limit:
            return
        for y in rows[x]:
            if y not in on_path:
                path.append(y)
                on_path.add(y)
                dfs()
                on_path.discard(y)
                path.pop()

    dfs()
    return {v: sorted(ps) for v, ps in found.items()}


def enumerate_shortest_paths(g: MixedGraph, u: int, v: int) -> list[tuple[int, ...]]:
    """All simple paths of length ``d(u, v)``, sorted; empty if unreachable."""
    rows = _rows(g)
    target = bfs_distances(g, u)[v - 1]
    if target is None:
        return []
    out = []
    path = [u - 1]

    def dfs() -> None:
        x = path[-1]
        if len(path) - 1 == target:
            if x == v - 1:
                out.append(tuple(p + 1 for p in path))
            return
        for y in rows[x]:
            if y not in path:
                path.append(y)
                dfs()
                path.pop()

    dfs()
    return sorted(out)


def closed_walk_length(
    g: MixedGraph, path_a: tuple[int, ...], path_b: tuple[int, ...]
) -> int | None:
    """Walk out along ``path_a`` from where it leaves ``path_b`` and back along ``path_b``.

    Steps may use links in either direction.  Returns the number of steps,
    or ``None`` if the joined sequence is not a closed walk of ``g``.
    """
    if path_a[-1] != path_b[-1]:
        return None
    split = 0
    while split < min(len(path_a), len(path_b)) and path_a[split] == path_b[split]:
        split += 1
    if split == 0:
        return None
    walk = list(path_a[split - 1 :]) + list(reversed(path_b[split:-1]))
    walk.append(walk[0])
    adj = g.adj
    for x, y in zip(walk, walk[1:]):
        if not (adj[x - 1, y - 1] or adj[y - 1, x - 1]):
            return None
    return len(walk) - 1


# equivalence ------------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceReport:
    source: int
    divergence: str | None = None

    @property
    def ok(self) -> bool:
        return self.divergence is None


def assert_equivalence(g: MixedGraph, u: int, *, row=None, paths: bool | None = None):
    """Compare the refined row and path queries for ``u`` against brute force.

    ``row`` overrides the row under test (for fault injection).  Path sets are
    compared when ``paths`` is true; by default only for ``n <= 12``.  Returns
    an :class:`EquivalenceReport` naming the first divergence, if any.
    """
    from .paths import count_paths, reconstruct_all, reconstruct_one, spsp
    from .refined import build_refined

    injected = row is not None
    if row is None:
        row = build_refined(g, u)
    if paths is None:
        paths = g.n <= 12
    dist = bfs_distances(g, u)
    preds = pred_sets(g, u)

    def fail(msg: str) -> EquivalenceReport:
        return EquivalenceReport(u, f"source {u}: {msg}")

    for j in g.vertices():
        if row.dist[j] != dist[j - 1]:
            return fail(f"distance to {j} is {row.dist[j]}, oracle {dist[j - 1]}")
        if set(row.preds[j]) != preds[j - 1]:
            return fail(
                f"predecessors of {j} are {sorted(row.preds[j])}, oracle {sorted(preds[j - 1])}"
            )
    for v in g.vertices():
        if dist[v - 1] is None:
            continue
        counter: Counter = Counter()
        one = reconstruct_one(row, v, counter)
        if counter["lookups"] != dist[v - 1] or len(one) - 1 != dist[v - 1]:
            return fail(f"single path to {v} took {counter['lookups']} lookups")
    if not paths:
        return EquivalenceReport(u)
    expected = all_shortest_paths(g, u)
    for v in g.vertices():
        want = expected[v]
        if count_paths(row, v) != len(want):
            return fail(f"{count_paths(row, v)} paths to {v}, oracle {len(want)}")
        got = list(reconstruct_all(row, v).paths)
        if got != want:
            return fail(f"path set to {v} differs from oracle")
        if not injected and list(spsp(g, u, v).paths) != want:
            return fail(f"single-pair query to {v} differs from oracle")
    return EquivalenceReport(u)
