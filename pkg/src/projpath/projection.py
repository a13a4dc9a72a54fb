"""Leveled projection trees and their bracket notation.

A projection of a graph from a base vertex ``u`` is the tree of all simple
paths leaving ``u``: the children of a node are the vertices adjacent from
it, minus every vertex already on its root path.  An inverse projection does
the same over reversed adjacency, so ``u`` terminates every route.

Bracket text writes a node as its label followed, when it has children, by a
parenthesized comma-separated child list; ``(0)`` marks a node whose child
set came out empty before the depth bound was reached::

    1(2(3(4),7(8),8(5,6,7)),4(3(2)))
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Literal, Union

from .errors import (
    BracketSyntaxError,
    BudgetExceededError,
    DuplicateSiblingError,
    ProjPathError,
    RepeatOnPathError,
    SameBranchError,
)
from .graph import MixedGraph

Direction = Literal["direct", "inverse"]
AUTO = "auto"
DEFAULT_NODE_BUDGET = 10**6


@dataclass(frozen=True)
class ProjectionNode:
    vertex: int
    level: int
    children: tuple[ProjectionNode, ...] = ()
    exhausted: bool = False


@dataclass(frozen=True)
class Projection:
    base: int
    root: ProjectionNode
    depth: int
    direction: Direction = "direct"

    def walk(self) -> Iterator[tuple[tuple[int, ...], ProjectionNode]]:
        """Yield ``(root_path, node)`` in preorder (left to right)."""
        stack: list[tuple[tuple[int, ...], ProjectionNode]] = [
            ((self.root.vertex,), self.root)
        ]
        while stack:
            path, node = stack.pop()
            yield path, node
            for child in reversed(node.children):
                stack.append((path + (child.vertex,), child))

    def node_count(self) -> int:
        return sum(1 for _ in self.walk())

    def levels(self) -> list[list[int]]:
        """Multiset of vertices per level, left to right."""
        out: list[list[int]] = [[] for _ in range(self.depth + 1)]
        frontier = [self.root]
        while frontier:
            for node in frontier:
                while len(out) <= node.level:
                    out.append([])
                out[node.level].append(node.vertex)
            frontier = [c for node in frontier for c in node.children]
        return out

    def vertices(self) -> set[int]:
        return {node.vertex for _, node in self.walk()}

    def links(self) -> set[tuple[int, int]]:
        """``(parent, child)`` vertex pairs present in the tree."""
        return {
            (node.vertex, child.vertex)
            for _, node in self.walk()
            for child in node.children
        }

    def find(self, path: Sequence[int]) -> ProjectionNode | None:
        """Return the node reached by following ``path`` from the root."""
        if not path or path[0] != self.root.vertex:
            return None
        node = self.root
        for v in path[1:]:
            for child in node.children:
                if child.vertex == v:
                    node = child
                    break
            else:
                return None
        return node


# building -----------------------------------------------------------------


def _resolve_depth(g: MixedGraph, u: int, depth: int | str, inverse: bool) -> int:
    if depth == AUTO:
        from .refined import build_refined

        row = build_refined(g.transpose() if inverse else g, u)
        return row.max_distance()
    if isinstance(depth, bool) or not isinstance(depth, int) or depth < 0:
        raise ValueError(f"depth must be a non-negative integer or 'auto', got {depth!r}")
    return depth


def _grow(
    neighbors: Callable[[int], tuple[int, ...]],
    base: int,
    depth: int,
    node_budget: int,
) -> ProjectionNode:
    count = 1
    on_path: set[int] = set()

    def grow(v: int, level: int) -> ProjectionNode:
        nonlocal count
        if level == depth:
            return ProjectionNode(v, level)
        on_path.add(v)
        generated = [w for w in neighbors(v) if w not in on_path]
        count += len(generated)
        if count > node_budget:
            raise BudgetExceededError(
                f"projection from {base} exceeds node budget {node_budget}"
            )
        children = tuple(grow(w, level + 1) for w in generated)
        on_path.discard(v)
        return ProjectionNode(v, level, children, exhausted=not generated)

    return grow(base, 0)


def build_projection(
    g: MixedGraph,
    u: int,
    depth: int | str = AUTO,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Projection:
    """Build the full projection of ``g`` from ``u``.

    With ``depth="auto"`` the tree is grown to the eccentricity of ``u`` (the
    largest finite distance when some vertices are unreachable), which makes
    it vertex-complete.  Raises :class:`BudgetExceededError` once the tree
    would hold more than ``node_budget`` nodes.
    """
    return _build(g, u, depth, node_budget, inverse=False)


def build_inverse_projection(
    g: MixedGraph,
    u: int,
    depth: int | str = AUTO,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Projection:
    """Projection over reversed adjacency: every root path read backwards is a route into ``u``."""
    return _build(g, u, depth, node_budget, inverse=True)


def _build(
    g: MixedGraph, u: int, depth: int | str, node_budget: int, inverse: bool
) -> Projection:
    g.check_vertex(u)
    if node_budget <= 0:
        raise ValueError("node_budget must be positive")
    k = _resolve_depth(g, u, depth, inverse)
    neighbors = g.in_neighbors if inverse else g.out_neighbors
    root = _grow(neighbors, u, k, node_budget)
    return Projection(u, root, k, "inverse" if inverse else "direct")


# bracket notation ---------------------------------------------------------


def to_bracket(p: Projection) -> str:
    parts: list[str] = []

    def emit(node: ProjectionNode) -> None:
        parts.append(str(node.vertex))
        if node.children:
            parts.append("(")
            for i, child in enumerate(node.children):
                if i:
                    parts.append(",")
                emit(child)
            parts.append(")")
        elif node.exhausted:
            parts.append("(0)")

    emit(p.root)
    return "".join(parts)


class _BracketParser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise BracketSyntaxError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def number(self) -> tuple[int, int]:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start : self.pos]
        if not digits:
            found = self.text[start] if start < len(self.text) else "end of input"
            raise BracketSyntaxError(f"expected vertex label, found {found!r}", start)
        if len(digits) > 1 and digits[0] == "0":
            raise BracketSyntaxError(f"leading zero in label {digits!r}", start)
        return int(digits), start

    def node(self, level: int, path: set[int]) -> ProjectionNode:
        vertex, start = self.number()
        if vertex == 0:
            raise BracketSyntaxError("vertex labels start at 1", start)
        if vertex in path:
            raise RepeatOnPathError(f"vertex {vertex} repeats on its root path", start)
        if self.peek() != "(":
            return ProjectionNode(vertex, level)
        self.pos += 1
        mark = self.pos
        first, _ = self.number()
        if first == 0:
            self.expect(")")
            return ProjectionNode(vertex, level, (), exhausted=True)
        self.pos = mark
        path.add(vertex)
        children: list[ProjectionNode] = []
        seen: set[int] = set()
        while True:
            self._skip()
            child_start = self.pos
            child = self.node(level + 1, path)
            if child.vertex in seen:
                raise DuplicateSiblingError(
                    f"vertex {child.vertex} repeated among siblings", child_start
                )
            seen.add(child.vertex)
            children.append(child)
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect(")")
            break
        path.discard(vertex)
        return ProjectionNode(vertex, level, tuple(children))


def parse_bracket(text: str, direction: Direction = "direct") -> Projection:
    """Parse bracket text into a projection (structure only).

    The depth of the result is the deepest level present in the text.
    """
    parser = _BracketParser(text)
    root = parser.node(0, set())
    if parser.peek():
        raise BracketSyntaxError("trailing input", parser.pos)
    p = Projection(root.vertex, root, 0, direction)
    depth = max(node.level for _, node in p.walk())
    return Projection(root.vertex, root, depth, direction)


# replicas and cycles ------------------------------------------------------


@dataclass(frozen=True)
class Instance:
    vertex: int
    level: int
    path: tuple[int, ...]
    original: bool = False


@dataclass(frozen=True)
class ReplicaReport:
    """Every instance of every vertex, in preorder, with the original flagged."""

    instances: dict[int, tuple[Instance, ...]] = field(default_factory=dict)

    def original(self, v: int) -> Instance:
        return next(i for i in self.instances[v] if i.original)

    def replicas(self, v: int | None = None) -> list[Instance]:
        groups = [self.instances[v]] if v is not None else self.instances.values()
        return [i for group in groups for i in group if not i.original]


def replica_report(p: Projection) -> ReplicaReport:
    found: dict[int, list[tuple[int, tuple[int, ...]]]] = {}
    for path, node in p.walk():
        found.setdefault(node.vertex, []).append((node.level, path))
    instances = {}
    for v, group in sorted(found.items()):
        # min() keeps the first of equal levels, and preorder puts the
        # leftmost instance first.
        best = min(range(len(group)), key=lambda i: group[i][0])
        instances[v] = tuple(
            Instance(v, level, path, original=(i == best))
            for i, (level, path) in enumerate(group)
        )
    return ReplicaReport(instances)


InstanceLike = Union[Instance, Sequence[int]]


def _as_path(inst: InstanceLike) -> tuple[int, ...]:
    return inst.path if isinstance(inst, Instance) else tuple(inst)


def cycle_length(p: Projection, inst_a: InstanceLike, inst_b: InstanceLike) -> int:
    """Length of the cycle closed by two instances of one vertex.

    The two root paths are joined at their deepest common ancestor ``w``; the
    result is ``(level_a - level_w) + (level_b - level_w)``.
    """
    a, b = _as_path(inst_a), _as_path(inst_b)
    for path in (a, b):
        if p.find(path) is None:
            raise ProjPathError(f"{list(path)} is not a root path of the projection")
    if a[-1] != b[-1]:
        raise ValueError(f"instances of different vertices {a[-1]} and {b[-1]}")
    if a == b:
        raise ValueError("cycle needs two distinct instances")
    common = 0
    for x, y in zip(a, b):
        if x != y:
            break
        common += 1
    if common in (len(a), len(b)):
        raise SameBranchError("one instance lies on the other's root path")
    w_level = common - 1
    return (len(a) - 1 - w_level) + (len(b) - 1 - w_level)


# completeness -------------------------------------------------------------


def is_vertex_complete(p: Projection, g: MixedGraph) -> bool:
    return p.vertices() == set(g.vertices())


def is_complete(p: Projection, g: MixedGraph) -> bool:
    """Vertex-complete and every edge and arc of ``g`` is shown by some link.

    An edge is shown by a link in either orientation; an arc only by a link
    that follows its direction (reversed for inverse projections).
    """
    if not is_vertex_complete(p, g):
        return False
    links = p.links()
    if p.direction == "inverse":
        links = {(c, q) for q, c in links}
    for u, v in g.edges():
        if (u, v) not in links and (v, u) not in links:
            return False
    return all(arc in links for arc in g.arcs())
