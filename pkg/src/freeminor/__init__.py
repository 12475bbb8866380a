"""Free-planar graphs: recognition, obstruction sets and certificates."""

from .bridges import extract_certificate
from .catalog import make_catalog, parse_catalog_id
from .decomposition import decompose_3connected, decompose_blocks
from .freeop import free_forbidden
from .freeplanar import (is_free_planar, is_free_planar_def, is_free_planar_minors,
                         is_free_planar_structural)
from .graph import Graph, GraphError
from .graph6 import parse_graph6, write_graph6
from .isomorphism import GraphSet, canonical_key, is_isomorphic
from .minors import find_minor_model, has_minor
from .planarity import is_planar_fast, is_planar_minor

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "GraphSet", "canonical_key", "decompose_3connected",
    "decompose_blocks", "extract_certificate", "find_minor_model", "free_forbidden",
    "has_minor", "is_free_planar", "is_free_planar_def", "is_free_planar_minors",
    "is_free_planar_structural", "is_isomorphic", "is_planar_fast", "is_planar_minor",
    "make_catalog", "parse_catalog_id", "parse_graph6", "write_graph6",
]
