"""Shortest-path queries answered by backtracking over predecessor rows."""

from __future__ import annotations

import csv
import io
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import NoPathError, PathBudgetExceededError, RowFormatError, VertexOutOfRangeError
from .graph import MixedGraph
from .refined import PredecessorRow, _row_from_preds, build_refined, format_cell

Path = tuple[int, ...]
DEFAULT_PATH_BUDGET = 10**5


@dataclass(frozen=True)
class PathSet:
    """All shortest paths between one pair, sorted lexicographically."""

    source: int
    target: int
    paths: tuple[Path, ...]

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def to_text(self) -> str:
        return "".join(" ".join(map(str, p)) + "\n" for p in self.paths)


def _check(row: PredecessorRow, v: int) -> None:
    if not isinstance(v, int) or not 1 <= v <= row.n:
        raise VertexOutOfRangeError(v, row.n)


def count_paths(row: PredecessorRow, v: int) -> int:
    """Number of shortest paths to ``v``: sum over predecessors, level by level."""
    _check(row, v)
    if row.dist[v] is None:
        return 0
    counts: dict[int, int] = {row.source: 1}
    order = sorted((d, j) for j, d in row.dist.items() if d)
    for d, j in order:
        if d > row.dist[v]:
            break
        counts[j] = sum(counts[p] for p in row.preds[j])
    return counts[v]


def reconstruct_all(
    row: PredecessorRow, v: int, path_budget: int = DEFAULT_PATH_BUDGET
) -> PathSet:
    """Every shortest path from the row's source to ``v``."""
    _check(row, v)
    if row.dist[v] is None:
        return PathSet(row.source, v, ())
    total = count_paths(row, v)
    if total > path_budget:
        raise PathBudgetExceededError(
            f"{total} shortest paths {row.source}->{v} exceed budget {path_budget}"
        )
    found: list[Path] = []
    stack: list[tuple[int, ...]] = [(v,)]
    while stack:
        tail = stack.pop()
        head = tail[-1]
        if head == row.source:
            found.append(tail[::-1])
            continue
        for p in row.preds[head]:
            stack.append(tail + (p,))
    return PathSet(row.source, v, tuple(sorted(found)))


def reconstruct_one(
    row: PredecessorRow, v: int, counter: Counter | None = None
) -> Path:
    """The lexicographically smallest-predecessor path to ``v``.

    Each predecessor cell read bumps ``counter["lookups"]`` when a counter is
    given, so exactly ``dist[v]`` reads happen.
    """
    _check(row, v)
    if row.dist[v] is None:
        raise NoPathError(f"no path from {row.source} to {v}")
    path = [v]
    while path[-1] != row.source:
        cell = row.preds[path[-1]]
        if counter is not None:
            counter["lookups"] += 1
        path.append(min(cell))
    return tuple(reversed(path))


def sssp(g: MixedGraph, u: int) -> PredecessorRow:
    return build_refined(g, u)


def sdsp(g: MixedGraph, v: int) -> PredecessorRow:
    """Row over the reversed graph: cell ``j`` holds successors of ``j`` toward ``v``."""
    return build_refined(g.transpose(), v)


def sdsp_paths(
    row: PredecessorRow, u: int, path_budget: int = DEFAULT_PATH_BUDGET
) -> PathSet:
    """Shortest ``u -> v`` paths in the original graph from an :func:`sdsp` row."""
    back = reconstruct_all(row, u, path_budget)
    return PathSet(u, row.source, tuple(sorted(p[::-1] for p in back.paths)))


def spsp(
    g: MixedGraph, u: int, v: int, path_budget: int = DEFAULT_PATH_BUDGET
) -> PathSet:
    """All shortest ``u -> v`` paths; the level loop stops after ``v``'s level."""
    row = build_refined(g, u, stop_at=v)
    return reconstruct_all(row, v, path_budget)


# all pairs ----------------------------------------------------------------


@dataclass(frozen=True)
class ShortestPathMatrix:
    """Row ``i`` is the predecessor row of source ``i``."""

    rows: tuple[PredecessorRow, ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> PredecessorRow:
        return self.rows[i - 1]

    def cell(self, i: int, j: int) -> frozenset[int]:
        return self.rows[i - 1].preds[j]


def apsp(g: MixedGraph, workers: int | None = None) -> ShortestPathMatrix:
    """One independent refined build per source.

    With ``workers`` the rows are computed on a thread pool; the result does
    not depend on completion order.
    """
    sources = list(g.vertices())
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda u: build_refined(g, u), sources))
    else:
        rows = [build_refined(g, u) for u in sources]
    return ShortestPathMatrix(tuple(rows))


def spm_to_csv(spm: ShortestPathMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["source", *range(1, spm.n + 1)])
    for row in spm.rows:
        writer.writerow([row.source, *(format_cell(row, j) for j in range(1, spm.n + 1))])
    return buf.getvalue()


def spm_from_csv(text: str) -> ShortestPathMatrix:
    records = list(csv.reader(io.StringIO(text)))
    if not records or records[0][:1] != ["source"]:
        raise RowFormatError("missing 'source' header")
    n = len(records[0]) - 1
    if records[0][1:] != [str(j) for j in range(1, n + 1)]:
        raise RowFormatError("header must list columns 1..n")
    if len(records) - 1 != n:
        raise RowFormatError(f"expected {n} rows, got {len(records) - 1}")
    rows = []
    for i, rec in enumerate(records[1:], start=1):
        if len(rec) != n + 1 or rec[0] != str(i):
            raise RowFormatError(f"row {i} malformed")
        preds = {}
        for j, cell in enumerate(rec[1:], start=1):
            if (cell == "#") != (i == j):
                raise RowFormatError(f"cell ({i},{j}) is {cell!r}")
            if cell in ("#", "-"):
                preds[j] = frozenset()
            else:
                try:
                    preds[j] = frozenset(int(t) for t in cell.split("|"))
                except ValueError:
                    raise RowFormatError(f"bad cell ({i},{j}) {cell!r}") from None
                if any(not 1 <= p <= n for p in preds[j]):
                    raise RowFormatError(f"bad cell ({i},{j}) {cell!r}")
        rows.append(_row_from_preds(i, preds))
    return ShortestPathMatrix(tuple(rows))
