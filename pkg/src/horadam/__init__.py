"""Horadam cubes: words, exact counts, graph structure and Hamiltonian walks."""

from .errors import (
    HoradamError,
    InternalError,
    ParameterError,
    ResourceLimitError,
    TheoremViolation,
)
from .graph import HoradamGraph, build_graph
from .hamilton import hamiltonian_cycle, hamiltonian_path, path_endpoints, validate_walk
from .sequences import cube_coefficients, degree_table, edge_count, vertex_count
from .words import Params, enumerate_words

__all__ = [
    "HoradamError",
    "InternalError",
    "ParameterError",
    "ResourceLimitError",
    "TheoremViolation",
    "HoradamGraph",
    "build_graph",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "path_endpoints",
    "validate_walk",
    "cube_coefficients",
    "degree_table",
    "edge_count",
    "vertex_count",
    "Params",
    "enumerate_words",
]

__version__ = "0.1.0"
