"""Shortest paths on unweighted mixed graphs via refined projections."""

from .errors import (
    BracketSyntaxError,
    BudgetExceededError,
    GraphFormatError,
    NoPathError,
    PathBudgetExceededError,
    ProjPathError,
    VertexOutOfRangeError,
)
from .graph import MixedGraph, PairKind, load_graph
from .paths import (
    PathSet,
    ShortestPathMatrix,
    apsp,
    reconstruct_all,
    reconstruct_one,
    sdsp,
    sdsp_paths,
    spm_from_csv,
    spm_to_csv,
    spsp,
    sssp,
)
from .projection import (
    AUTO,
    Projection,
    ProjectionNode,
    build_inverse_projection,
    build_projection,
    cycle_length,
    is_complete,
    is_vertex_complete,
    parse_bracket,
    replica_report,
    to_bracket,
)
from .refined import (
    NotStronglyReachable,
    PredecessorRow,
    build_refined,
    diameter,
    eccentricity,
    inverse_diameter,
    inverse_eccentricity,
    refine_projection,
    refined_from_row,
    row_from_refined,
    row_from_text,
)

__version__ = "0.1.0"
