"""
Geometry module - the ambient space F_q^d, point sets, polynomials and varieties.
"""

from .ambient import (
    AmbientSpec,
    Point,
    add_ranks,
    coords_of,
    dist_diff,
    dot,
    dot_ranks,
    grid_shape,
    neg_ranks,
    norm,
    norm_ranks,
    norm_table,
    point_add,
    point_neg,
    rank,
    ranks_of,
    scale,
    sub_ranks,
    translate_grid,
    unrank,
)
from .pointset import PointSet
from .polynomials import Polynomial, Term, parse_polynomial, parse_polynomials, read_polynomials
from .varieties import (
    AffineSubspaceReport,
    SizeProfile,
    Variety,
    VarietyDef,
    contained_flats,
    enumerate_variety,
    hyperplane,
    load_variety,
    max_affine_subspace,
    size_profile,
    sphere,
    sphere_size_formula,
)

__all__ = [
    "AffineSubspaceReport",
    "AmbientSpec",
    "Point",
    "PointSet",
    "Polynomial",
    "SizeProfile",
    "Term",
    "Variety",
    "VarietyDef",
    "add_ranks",
    "contained_flats",
    "coords_of",
    "dist_diff",
    "dot",
    "dot_ranks",
    "enumerate_variety",
    "grid_shape",
    "hyperplane",
    "load_variety",
    "max_affine_subspace",
    "neg_ranks",
    "norm",
    "norm_ranks",
    "norm_table",
    "parse_polynomial",
    "parse_polynomials",
    "point_add",
    "point_neg",
    "rank",
    "ranks_of",
    "read_polynomials",
    "scale",
    "size_profile",
    "sphere",
    "sphere_size_formula",
    "sub_ranks",
    "translate_grid",
    "unrank",
]
