"""Schur multipliers and the s-invariants of nilpotent Lie algebras and pairs."""

from .algebra import (
    AlgebraError,
    LieAlgebra,
    StructureConstants,
    SubspaceBasis,
    abelian,
    bracket,
    center,
    central_product,
    derived_subalgebra,
    direct_sum,
    filiform,
    heisenberg,
    is_nilpotent,
    validate,
)
from .catalog import families_with_s, lookup, self_check
from .homology import multiplier_dim, multiplier_dim_closed_form
from .invariants import (
    SplitPair,
    pair_multiplier_dim,
    pair_s,
    pair_t,
    s_invariant,
    s_lower_bound_check,
    t_invariant,
)

__version__ = "0.1.0"
