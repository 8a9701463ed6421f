"""Exact distance invariants of convolutional codes over finite fields.

The package computes window (column) distances and their generalized and
unrestricted variants, their limits with stabilization proofs, generalized
Hamming weights, generalized weights and the free distance, plus decision
procedures for monomial relations between codes (j-equivalence,
equivalence, isometry, strong isometry).  All arithmetic is exact.
"""

from .distances import (
    DistanceProfile,
    DistanceResult,
    StabilizationBound,
    column_distance,
    distance_profile,
    free_distance,
    gen_column_distance,
    gen_column_distance_limit,
    generalized_weight,
    ghw,
    limit_via_primed,
    stabilization_bound,
    unrestricted_gcd,
)
from .errors import (
    BudgetExceeded,
    ConvinvError,
    FieldMismatch,
    MapInvalid,
    NoncatastrophicRequired,
    OrderOutOfRange,
    RankDeficient,
)
from .field import GF, FieldSpec
from .maps import (
    CodeMap,
    MapVerdict,
    MonomialMap,
    check_equivalence,
    check_isometry,
    check_j_equivalence,
    check_strong_isometry,
    compose,
    identity_map,
    inverse,
    map_algebra,
    product,
    restrict,
)
from .poly import Polynomial, PolyMatrix, PolyVector, SupportSet, support_union
from .sliding import SlidingMatrix, coefficient_blocks, sliding, truncated_word
from .structure import (
    BlockCode,
    ConvCode,
    code_from_matrix,
    is_mdp,
    is_mds,
    is_noncatastrophic,
    is_strongly_mds,
    make_code,
    mdp_horizon,
    reverse_code,
    singleton_bound,
    strongly_mds_index,
)

__version__ = "0.1.0"

__all__ = [
    "BlockCode",
    "BudgetExceeded",
    "CodeMap",
    "ConvCode",
    "ConvinvError",
    "DistanceProfile",
    "DistanceResult",
    "FieldMismatch",
    "FieldSpec",
    "GF",
    "MapInvalid",
    "MapVerdict",
    "MonomialMap",
    "NoncatastrophicRequired",
    "OrderOutOfRange",
    "PolyMatrix",
    "PolyVector",
    "Polynomial",
    "RankDeficient",
    "SlidingMatrix",
    "StabilizationBound",
    "SupportSet",
    "check_equivalence",
    "check_isometry",
    "check_j_equivalence",
    "check_strong_isometry",
    "code_from_matrix",
    "coefficient_blocks",
    "column_distance",
    "compose",
    "distance_profile",
    "free_distance",
    "gen_column_distance",
    "gen_column_distance_limit",
    "generalized_weight",
    "ghw",
    "identity_map",
    "inverse",
    "is_mdp",
    "is_mds",
    "is_noncatastrophic",
    "is_strongly_mds",
    "limit_via_primed",
    "make_code",
    "map_algebra",
    "mdp_horizon",
    "product",
    "restrict",
    "reverse_code",
    "singleton_bound",
    "sliding",
    "stabilization_bound",
    "strongly_mds_index",
    "support_union",
    "truncated_word",
    "unrestricted_gcd",
]
