"""Elimination trees of graphs, rotations between them, and rotation distance."""

from ._core import (
    Decision,
    ElimTree,
    ElimTreeError,
    Graph,
    apply_sequence,
    bfs_distance,
    bfs_path,
    decide,
    diameter,
    enumerate_trees,
    from_ordering,
    generate,
    rotate,
    validate,
)

__all__ = [
    "Decision",
    "ElimTree",
    "ElimTreeError",
    "Graph",
    "apply_sequence",
    "bfs_distance",
    "bfs_path",
    "decide",
    "diameter",
    "enumerate_trees",
    "from_ordering",
    "generate",
    "rotate",
    "validate",
]

__version__ = "0.1.0"
