"""Strong orientations of bridgeless diameter-4 multigraphs.

The main entry point is pipeline.orient_diameter4, which orients every edge
of a connected bridgeless multigraph of diameter 4 whose edge girth is 4 or 5
and guarantees a directed diameter of at most edge girth + 13.  A brute-force
oracle, a per-cell distance verifier, a test-corpus generator and a small CLI
round out the package.
"""

from .errors import (
    ConflictError,
    ConstructionFailure,
    InternalError,
    InvalidRs,
    NotFound,
    PreconditionError,
    StrongOrientError,
    TooLarge,
)
from .graph import (
    MultiGraph,
    bfs_distances,
    diameter,
    edge_girth,
    find_bridges,
    graph_edge_girth,
    is_bridgeless,
    is_connected,
)
from .mixed import BACKWARD, FORWARD, UNDIRECTED, MixedOrientation
from .oracle import OracleResult, min_oriented_diameter, spot_check_bound

__all__ = [
    "MultiGraph",
    "MixedOrientation",
    "OracleResult",
    "UNDIRECTED",
    "FORWARD",
    "BACKWARD",
    "bfs_distances",
    "diameter",
    "edge_girth",
    "find_bridges",
    "graph_edge_girth",
    "is_bridgeless",
    "is_connected",
    "min_oriented_diameter",
    "spot_check_bound",
    "StrongOrientError",
    "PreconditionError",
    "InternalError",
    "ConflictError",
    "NotFound",
    "InvalidRs",
    "ConstructionFailure",
    "TooLarge",
]
