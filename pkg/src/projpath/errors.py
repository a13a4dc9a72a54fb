"""Exception hierarchy shared by the library and the command-line front end."""

from __future__ import annotations


class ProjPathError(Exception):
    """Base class for every error raised by projpath."""


class GraphFormatError(ProjPathError, ValueError):
    """Malformed graph input (matrix or edge list)."""


class NonSquareError(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


class BadTokenError(GraphFormatError):
    pass


class ConflictingPairError(GraphFormatError):
    pass


class VertexOutOfRangeError(ProjPathError, IndexError):
    def __init__(self, vertex: object, n: int) -> None:
        super().__init__(f"vertex {vertex} out of range 1..{n}")
        self.vertex = vertex
        self.n = n


class BudgetExceededError(ProjPathError):
    """A projection would grow beyond its node budget."""


class PathBudgetExceededError(BudgetExceededError):
    """Path enumeration would materialize more paths than allowed."""


class BracketSyntaxError(ProjPathError, ValueError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class DuplicateSiblingError(BracketSyntaxError):
    pass


class RepeatOnPathError(BracketSyntaxError):
    pass


class SameBranchError(ProjPathError, ValueError):
    """Two instances lie on one root path, so they close no cycle."""


class NoPathError(ProjPathError, LookupError):
    pass


class RowFormatError(ProjPathError, ValueError):
    """Malformed predecessor row or shortest-path matrix text."""


class ConfigError(ProjPathError, ValueError):
    pass
