"""Exact combinatorics of Gelfand-Zetlin polytopes for SL_n: faces, the
Schubert-cell correspondence, and face-based Chevalley formulas."""

from .diagrams import (
    Diagram,
    Edge,
    FaceClass,
    adjacent_vertices,
    close_face,
    diagram_of_sigma,
    face_contains,
    face_has_point,
    is_simple,
    sigma_of,
    simple_diagrams,
    switch_edge,
    tree_edge_root,
    vertex_point,
)
from .oracle import (
    BruteFace,
    brute_face_of_equalities,
    brute_faces,
    brute_integral_distance,
    brute_vertices,
    weyl_dimension,
)
from .polytope import (
    Facet,
    GZShape,
    contains,
    facet_distance,
    lattice_points,
    projection_root_coords,
)
from .schubert import (
    Borel,
    VerifyReport,
    admissible_census,
    chevalley_faces,
    class_label,
    gamma_diagram,
    gamma_face,
    is_admissible,
    preceding_cells,
    r_set,
    verify,
)
from .weyl import (
    Perm,
    Root,
    Weight,
    avoids_patterns,
    bruhat_coatoms,
    bruhat_leq,
    chevalley_classical,
    length,
    pairing,
    reflect,
)

__all__ = [name for name in dir() if not name.startswith("_")]
