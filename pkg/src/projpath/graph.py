"""Simple unweighted mixed graphs (undirected edges plus directed arcs).

Vertices carry external labels ``1..n``; the adjacency relation is a dense
boolean matrix indexed by ``label - 1``.  A pair ``(i, j)`` is an edge when
both ``adj[i][j]`` and ``adj[j][i]`` hold and an arc ``i -> j`` when only the
first does.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence

import numpy as np

from .errors import (
    BadTokenError,
    ConflictingPairError,
    GraphFormatError,
    NonSquareError,
    SelfLoopError,
    VertexOutOfRangeError,
)

COMMENT = "%"


class PairKind(enum.Enum):
    NONE = "none"
    EDGE = "edge"
    ARC_FORWARD = "arc_forward"
    ARC_BACKWARD = "arc_backward"


def _content_lines(lines: str | Iterable[str]) -> list[str]:
    if isinstance(lines, str):
        lines = lines.splitlines()
    out = []
    for line in lines:
        stripped = line.strip()
        if stripped and not stripped.startswith(COMMENT):
            out.append(stripped)
    return out


class MixedGraph:
    """Immutable mixed graph over vertices ``1..n``.

    Safe to share between threads once constructed.
    """

    __slots__ = ("_adj", "_out", "_in")

    def __init__(self, adj: Sequence[Sequence[bool]] | np.ndarray) -> None:
        a = np.array(adj, dtype=bool, copy=True)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise NonSquareError(f"adjacency must be square, got shape {a.shape}")
        loops = np.flatnonzero(np.diagonal(a))
        if loops.size:
            raise SelfLoopError(f"self-loop at vertex {loops[0] + 1}")
        a.setflags(write=False)
        self._adj = a
        self._out = tuple(tuple(int(j) + 1 for j in np.flatnonzero(row)) for row in a)
        self._in = tuple(tuple(int(i) + 1 for i in np.flatnonzero(col)) for col in a.T)

    # construction -------------------------------------------------------

    @classmethod
    def from_adjacency_matrix(cls, rows: str | Iterable[str]) -> MixedGraph:
        """Parse ``n`` lines of ``n`` tokens from ``{0, 1, #}``.

        ``#`` may only appear on the diagonal; lines starting with ``%`` are
        comments.
        """
        grid = [line.split() for line in _content_lines(rows)]
        n = len(grid)
        for i, tokens in enumerate(grid):
            if len(tokens) != n:
                raise NonSquareError(
                    f"row {i + 1} has {len(tokens)} tokens, expected {n}"
                )
        adj = np.zeros((n, n), dtype=bool)
        for i, tokens in enumerate(grid):
            for j, tok in enumerate(tokens):
                if tok == "1":
                    if i == j:
                        raise SelfLoopError(f"self-loop at vertex {i + 1}")
                    adj[i, j] = True
                elif tok == "#":
                    if i != j:
                        raise BadTokenError(
                            f"'#' off the diagonal at ({i + 1},{j + 1})"
                        )
                elif tok != "0":
                    raise BadTokenError(f"bad token {tok!r} at ({i + 1},{j + 1})")
        return cls(adj)

    @classmethod
    def from_edge_list(
        cls, n: int, items: Iterable[tuple[int, int, str]]
    ) -> MixedGraph:
        """Build from ``(u, v, kind)`` triples, ``kind`` being ``"edge"`` or ``"arc"``.

        Repeating an item is harmless; giving one pair two different kinds
        (or two opposite arcs) raises :class:`ConflictingPairError`.
        """
        if n < 0:
            raise GraphFormatError(f"vertex count must be non-negative, got {n}")
        adj = np.zeros((n, n), dtype=bool)
        kinds: dict[tuple[int, int], tuple[str, int, int]] = {}
        for u, v, kind in items:
            for w in (u, v):
                if not 1 <= w <= n:
                    raise VertexOutOfRangeError(w, n)
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if kind not in ("edge", "arc"):
                raise BadTokenError(f"unknown pair kind {kind!r}")
            key = (min(u, v), max(u, v))
            entry = (kind, u, v) if kind == "arc" else (kind, *key)
            seen = kinds.setdefault(key, entry)
            if seen != entry:
                raise ConflictingPairError(
                    f"pair {key[0]},{key[1]} given as both {_describe(seen)}"
                    f" and {_describe(entry)}"
                )
            adj[u - 1, v - 1] = True
            if kind == "edge":
                adj[v - 1, u - 1] = True
        return cls(adj)

    @classmethod
    def from_edge_list_text(cls, text: str | Iterable[str]) -> MixedGraph:
        """Parse the ``n <count>`` / ``u v`` / ``u > v`` text format."""
        lines = _content_lines(text)
        if not lines:
            raise GraphFormatError("empty edge list")
        head = lines[0].split()
        if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
            raise GraphFormatError(f"expected header 'n <count>', got {lines[0]!r}")
        n = int(head[1])
        items = []
        for lineno, line in enumerate(lines[1:], start=2):
            tokens = line.split()
            if len(tokens) == 2:
                kind = "edge"
            elif len(tokens) == 3 and tokens[1] == ">":
                kind = "arc"
                tokens = [tokens[0], tokens[2]]
            else:
                raise BadTokenError(f"cannot parse edge line {lineno}: {line!r}")
            try:
                u, v = (int(t) for t in tokens)
            except ValueError:
                raise BadTokenError(f"non-integer vertex on line {lineno}") from None
            items.append((u, v, kind))
        return cls.from_edge_list(n, items)

    # serialization ------------------------------------------------------

    def to_matrix_text(self) -> str:
        rows = []
        for i, row in enumerate(self._adj):
            rows.append(
                " ".join("#" if i == j else str(int(x)) for j, x in enumerate(row))
            )
        return "".join(r + "\n" for r in rows)

    def to_edge_list_text(self) -> str:
        lines = [f"n {self.n}"]
        for u, v in self.edges():
            lines.append(f"{u} {v}")
        for u, v in self.arcs():
            lines.append(f"{u} > {v}")
        return "\n".join(lines) + "\n"

    # queries ------------------------------------------------------------

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adj(self) -> np.ndarray:
        """Read-only boolean adjacency matrix (0-based indices)."""
        return self._adj

    @property
    def m_ordered(self) -> int:
        """Number of true off-diagonal cells; an edge counts twice."""
        return int(self._adj.sum())

    @property
    def m_undirected(self) -> int:
        """Edges counted once plus arcs."""
        both = int((self._adj & self._adj.T).sum()) // 2
        return self.m_ordered - both

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, (int, np.integer)) or not 1 <= v <= self.n:
            raise VertexOutOfRangeError(v, self.n)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self._out[v - 1]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self._in[v - 1]

    def has_link(self, u: int, v: int) -> bool:
        """True when ``v`` is adjacent from ``u`` (edge or arc ``u -> v``)."""
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self._adj[u - 1, v - 1])

    def classify_pair(self, u: int, v: int) -> PairKind:
        fwd, back = self.has_link(u, v), self.has_link(v, u)
        if fwd and back:
            return PairKind.EDGE
        if fwd:
            return PairKind.ARC_FORWARD
        if back:
            return PairKind.ARC_BACKWARD
        return PairKind.NONE

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as ``(u, v)`` with ``u < v``, ascending."""
        i, j = np.nonzero(np.triu(self._adj & self._adj.T))
        return [(int(a) + 1, int(b) + 1) for a, b in zip(i, j)]

    def arcs(self) -> list[tuple[int, int]]:
        """Arcs ``(u, v)`` meaning ``u -> v``, ascending."""
        i, j = np.nonzero(self._adj & ~self._adj.T)
        return [(int(a) + 1, int(b) + 1) for a, b in zip(i, j)]

    def density(self) -> float:
        # Ordered-pair version of the usual edge ratio so arcs count once.
        n = self.n
        if n <= 1:
            return 0.0
        return self.m_ordered / (n * (n - 1))

    def transpose(self) -> MixedGraph:
        return MixedGraph(self._adj.T)

    # dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self._adj).tobytes()))

    def __repr__(self) -> str:
        return (
            f"MixedGraph(n={self.n}, edges={len(self.edges())},"
            f" arcs={len(self.arcs())})"
        )


def _describe(entry: tuple[str, int, int]) -> str:
    kind, u, v = entry
    return f"arc {u}>{v}" if kind == "arc" else "edge"


def detect_format(text: str) -> str:
    """Return ``"edgelist"`` or ``"matrix"`` from the first content line."""
    lines = _content_lines(text)
    if lines and lines[0].split()[0] == "n":
        return "edgelist"
    return "matrix"


def load_graph(text: str, fmt: str = "auto") -> MixedGraph:
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "matrix":
        return MixedGraph.from_adjacency_matrix(text)
    if fmt == "edgelist":
        return MixedGraph.from_edge_list_text(text)
    raise ValueError(f"unknown graph format {fmt!r}")
