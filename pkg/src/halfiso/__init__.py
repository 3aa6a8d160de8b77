"""Half-isomorphisms of finite groupoids, quasigroups and loops."""

__version__ = "0.1.0"

from .analysis import (
    CommutingSet,
    HalfIsoVerdict,
    check_theorem31_agreement,
    commuting_set,
    is_half_isomorphism,
    is_special_half_isomorphism,
    psi_image,
    search_half_isomorphisms,
    specialness,
    specialness_criteria,
)
from .corpus import builtin, corpus
from .errors import (
    CapExceededError,
    CommutativeInputError,
    HalfIsoError,
    PreconditionError,
    SizeMismatchError,
    TableFormatError,
)
from .groups import (
    HalfAutomorphismGroups,
    anti_automorphism_exists,
    half_groups,
    index_relation_check,
    verify_prop22,
)
from .infinite import (
    FinSuppElement,
    LoopPair,
    nonspecial_witness_infinite,
    phi,
    phi_inverse,
    product,
    verify_half_automorphism,
)
from .isomorphism import is_isomorphic
from .magma import (
    AlgebraClass,
    CayleyTable,
    Kind,
    Permutation,
    apply_iso,
    classify,
    format_table,
    is_associative,
    is_commutative,
    load_table,
    parse_permutation,
    parse_table,
    transpose,
)
from .principal import (
    PairPartition,
    PrincipalCount,
    SigmaVector,
    are_half_isomorphic,
    enumerate_MI,
    enumerate_N,
    is_principal_h_groupoid,
    pair_partition,
    principal_count,
    sigma_table,
)
