"""Exact tropical convexity: residuation, dominators, Kleene stars, polytropes."""

from .core import (
    DimensionError,
    Flavor,
    FlavorError,
    PreconditionError,
    Scalar,
    TropMatrix,
    TropVector,
    as_scalar,
    leq,
    mat,
    mat_from_columns,
    negate_transpose,
    scale,
    trop_add,
    trop_mat_mul,
    trop_sum,
    vec,
)
from .residuation import (
    DominationWitness,
    Polytope,
    bracket,
    dominates_at,
    dominates_polytope_at,
    domination_witness,
    member,
    principal_projection,
)
from .kleene import (
    Classification,
    KleeneStar,
    classify,
    dominator,
    dominator_dual,
    duality_chi,
    duality_rho,
    is_kleene_star,
    is_min_plus_convex,
    min_plus_hull,
    verify_dominator_relation,
)
from .polytope import (
    MidpointReport,
    ProjectivePoint,
    affine_point,
    polytope_equal,
    projectivise,
    random_member,
    random_rational,
    reduce_generators,
    sample_euclidean_midpoints,
)
from .docio import (
    DocumentError,
    MatrixDocument,
    format_rational,
    format_vector,
    parse_matrix_document,
    parse_rational,
    parse_vector,
    serialize_matrix_document,
)

__all__ = [
    "Classification",
    "DimensionError",
    "DocumentError",
    "DominationWitness",
    "Flavor",
    "FlavorError",
    "KleeneStar",
    "MatrixDocument",
    "MidpointReport",
    "Polytope",
    "PreconditionError",
    "ProjectivePoint",
    "Scalar",
    "TropMatrix",
    "TropVector",
    "affine_point",
    "as_scalar",
    "bracket",
    "classify",
    "dominates_at",
    "dominates_polytope_at",
    "domination_witness",
    "dominator",
    "dominator_dual",
    "duality_chi",
    "duality_rho",
    "format_rational",
    "format_vector",
    "is_kleene_star",
    "is_min_plus_convex",
    "leq",
    "mat",
    "mat_from_columns",
    "member",
    "min_plus_hull",
    "negate_transpose",
    "parse_matrix_document",
    "parse_rational",
    "parse_vector",
    "polytope_equal",
    "principal_projection",
    "projectivise",
    "random_member",
    "random_rational",
    "reduce_generators",
    "sample_euclidean_midpoints",
    "scale",
    "serialize_matrix_document",
    "trop_add",
    "trop_mat_mul",
    "trop_sum",
    "vec",
]

__version__ = "0.1.0"
