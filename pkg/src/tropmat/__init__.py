"""Exact structure theory of 2x2 max-plus (tropical) matrices.

Green's relations and preorders, idempotents and their families, regularity
witnesses, maximal subgroups, and the two-sided ideal lattice, all decided
by exact rational arithmetic and cross-checkable against a residuation
oracle.
"""

from .semiring import (
    BOTTOM,
    INF_DIST,
    NEG_INF,
    POS_INF,
    ExtDistance,
    ProjPoint,
    TropScalar,
    delta,
    ext_sub,
    t_add,
    t_mul,
)
from .matrix import (
    ResidualMatrix,
    TropMatrix,
    TropVector,
    is_monomial,
    left_residual,
    mat_add,
    mat_mul,
    mat_vec,
    monomial_inverse,
    parse_matrix,
    residual_scalar,
    right_residual,
    scale,
    solves_right,
    transpose,
)
from .geometry import (
    ConvexSet,
    IsoType,
    canonical_set,
    diameter,
    embed_image,
    embeds_isometrically,
    in_column_space,
    iso_type,
    isometric,
    parse_set,
    proj_column_space,
    proj_point_of,
    proj_row_space,
    subset,
)
from .green import (
    GreenRelation,
    RClass,
    d_class_witness,
    j_factorization,
    leq_J,
    leq_L,
    leq_R,
    r_class_of,
    related,
    witness_Z,
)
from .structure import (
    GroupType,
    IdempotentForm,
    fixes_image,
    group_type_of_H,
    idempotent_form,
    idempotent_in_H,
    in_idempotent_family,
    is_idempotent,
    regular_witness,
    subgroup_element,
)
from .ideals import (
    IdealDescriptor,
    Ordering,
    decompose,
    ideal_compare,
    ideal_contains,
    ideal_from_generators,
    is_principal,
    parse_descriptor,
    principal_ideal_of,
)

__version__ = "0.1.0"

__all__ = [
    "BOTTOM",
    "INF_DIST",
    "NEG_INF",
    "POS_INF",
    "ConvexSet",
    "ExtDistance",
    "GreenRelation",
    "GroupType",
    "IdealDescriptor",
    "IdempotentForm",
    "IsoType",
    "Ordering",
    "ProjPoint",
    "RClass",
    "ResidualMatrix",
    "TropMatrix",
    "TropScalar",
    "TropVector",
    "canonical_set",
    "d_class_witness",
    "decompose",
    "delta",
    "diameter",
    "embed_image",
    "embeds_isometrically",
    "ext_sub",
    "fixes_image",
    "group_type_of_H",
    "idempotent_form",
    "idempotent_in_H",
    "ideal_compare",
    "ideal_contains",
    "ideal_from_generators",
    "in_column_space",
    "in_idempotent_family",
    "is_idempotent",
    "is_monomial",
    "is_principal",
    "iso_type",
    "isometric",
    "j_factorization",
    "left_residual",
    "leq_J",
    "leq_L",
    "leq_R",
    "mat_add",
    "mat_mul",
    "mat_vec",
    "monomial_inverse",
    "parse_descriptor",
    "parse_matrix",
    "parse_set",
    "principal_ideal_of",
    "proj_column_space",
    "proj_point_of",
    "proj_row_space",
    "r_class_of",
    "regular_witness",
    "related",
    "residual_scalar",
    "right_residual",
    "scale",
    "solves_right",
    "subgroup_element",
    "subset",
    "t_add",
    "t_mul",
    "transpose",
    "witness_Z",
]
