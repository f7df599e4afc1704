"""Exact tropical (max-plus) invariant theory of permutation groups."""

from .embed import (
    DistortionReport,
    EmbeddingSpec,
    distortion_estimate,
    embed,
    max_filter,
    orbit_distance,
    separating_set,
    separation_check,
)
from .errors import (
    DimensionError,
    DomainError,
    NotFinitelyGenerated,
    ResourceError,
    SamplingError,
    TropInvError,
    ValidationError,
)
from .groups import PermGroup, coset_representatives, is_invariant, transfer, transfer_monomial
from .invariants import (
    EDecomposition,
    edge_direction_census,
    elementary_symmetric,
    finite_generators,
    majorizes,
    product_transfer_check,
    sn_decompose,
)
from .lp import LpOutcome, LpProblem, in_convex_hull, solve_lp
from .poly import (
    BOTTOM,
    TropPoly,
    canonicalize,
    degree,
    evaluate,
    is_redundant_term,
    trop_add,
    trop_equals,
    trop_mul,
    trop_pow,
    witness_point,
)
from .polytope import LatticePolytope, contains, edges, newton_polytope, transfer_polytope
from .rational import (
    TropRational,
    boolean_rational,
    expr_eval,
    factor_boolean_univariate,
    key_identity_holds,
    rat_equals,
    rewrite_transfer,
)

__version__ = "0.1.0"

__all__ = [
    "BOTTOM",
    "DimensionError",
    "DistortionReport",
    "DomainError",
    "EDecomposition",
    "EmbeddingSpec",
    "LatticePolytope",
    "LpOutcome",
    "LpProblem",
    "NotFinitelyGenerated",
    "PermGroup",
    "ResourceError",
    "SamplingError",
    "TropInvError",
    "TropPoly",
    "TropRational",
    "ValidationError",
    "boolean_rational",
    "canonicalize",
    "contains",
    "coset_representatives",
    "degree",
    "distortion_estimate",
    "edge_direction_census",
    "edges",
    "elementary_symmetric",
    "embed",
    "evaluate",
    "expr_eval",
    "factor_boolean_univariate",
    "finite_generators",
    "in_convex_hull",
    "is_invariant",
    "is_redundant_term",
    "key_identity_holds",
    "majorizes",
    "max_filter",
    "newton_polytope",
    "orbit_distance",
    "product_transfer_check",
    "rat_equals",
    "rewrite_transfer",
    "separating_set",
    "separation_check",
    "sn_decompose",
    "solve_lp",
    "transfer",
    "transfer_monomial",
    "transfer_polytope",
    "trop_add",
    "trop_equals",
    "trop_mul",
    "trop_pow",
    "witness_point",
]
