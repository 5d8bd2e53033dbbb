"""Exact arithmetic for Henselian local rings.

Computable local-ring instances, the Boolean algebra of idempotents,
universal decomposition algebras with their symmetric-group action,
Hensel lifting of roots, idempotents, and factorizations, and
Henselization towers with an exact equality decision.
"""

from .algebra import (
    AlgElement,
    FiniteAlgebra,
    Idempotent,
    bool_ops,
    char_poly,
    decompose_local,
    fact_to_idem,
    idem_join,
    idem_leq,
    idem_meet,
    idem_not,
    idem_to_fact,
    idem_xor,
    invert_element,
    is_local_algebra,
    minimal_polynomial,
    newton_lift_idempotent,
    radical_member,
    rank_polynomial,
    split_by_element,
    zero_dim_witness,
)
from .errors import HenselianError
from .hensel import (
    HenselCapability,
    decompose_finite_algebra,
    hensel_root_monic,
    hensel_root_nonmonic,
    lift_galois_idempotent,
    lift_idempotent_finite_algebra,
    lift_idempotent_uda,
    lift_monic_factorization,
    lift_nonmonic_factorization,
    lift_simple_root,
    transform_nonmonic,
)
from .poly import (
    Poly,
    bezout_coprime,
    field_factor,
    irreducible_poly,
    resultant,
    squarefree_decomposition,
)
from .rings import (
    FiniteField,
    LocalizedIntegers,
    ModularIntegers,
    PrimeField,
    Rationals,
    RingElement,
    TruncatedPadics,
    TruncatedSeries,
    UnramifiedPadics,
    parse_ring,
)
from .tower import (
    TowerElement,
    TowerRing,
    TowerStep,
    adjoin_hensel_root,
    adjoin_residue_extension,
    evaluate_into,
    separable_closure_step,
    tower_eq,
    tower_from_json,
    tower_local_split,
    tower_residue,
    tower_to_json,
)
from .uda import (
    Permutation,
    UdaAlgebra,
    build_uda,
    galois_from_idempotent,
    idempotent_is_zero,
    orbit_of,
    reduce_invariant,
    sn_act,
    uda_mul,
)

__version__ = "0.1.0"
