"""Minimal genus of second homology classes of right-angled Artin groups.

A class is an integer labelling of the oriented edges of a simple graph.
The package computes the cap bound (half the rank of the connection
matrix), star coverings, exact genus with torus certificates on the solved
families, and verifies square-tiled surface representatives.
"""

__version__ = "0.1.0"

from .certificates import certificate_problems, verify_certificate
from .graph import (
    Graph,
    OrientedGraph,
    complete_bipartite_parts,
    complete_multipartite_parts,
    connected_components,
    full_subgraph,
    is_complete,
    is_forest,
    is_star,
    min_vertex_cover,
    orient,
    validate_graph,
)
from .homology import (
    HomologyClass,
    cap_bound,
    connection_matrix,
    new_class,
    restrict_to_component,
    support,
)
from .kernels import BACKEND
from .linalg import IntMatrix, SkewIntMatrix, determinant, rank, skew_normal_form, smith_normal_form
from .solver import (
    GenusResult,
    genus,
    star_to_torus,
    tensor_decompose,
    torus_certificate,
    torus_representable,
    wedge_decompose,
)
from .starcover import min_star_cover, sc_cardinality, verify_star_cover
from .vankampen import genus_of, induced_class, represents, surface_summary, validate_diagram

__all__ = [
    "BACKEND",
    "GenusResult",
    "Graph",
    "HomologyClass",
    "IntMatrix",
    "OrientedGraph",
    "SkewIntMatrix",
    "cap_bound",
    "certificate_problems",
    "complete_bipartite_parts",
    "complete_multipartite_parts",
    "connected_components",
    "connection_matrix",
    "determinant",
    "full_subgraph",
    "genus",
    "genus_of",
    "induced_class",
    "is_complete",
    "is_forest",
    "is_star",
    "min_star_cover",
    "min_vertex_cover",
    "new_class",
    "orient",
    "rank",
    "represents",
    "restrict_to_component",
    "sc_cardinality",
    "skew_normal_form",
    "smith_normal_form",
    "star_to_torus",
    "support",
    "surface_summary",
    "tensor_decompose",
    "torus_certificate",
    "torus_representable",
    "validate_diagram",
    "validate_graph",
    "verify_certificate",
    "verify_star_cover",
    "wedge_decompose",
]
