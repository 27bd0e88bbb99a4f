"""Admissible monomial bases for the hit problem over F2."""

from .arith import (
    GenericDegreeSpec,
    alpha,
    binom_mod2,
    generic_degree,
    kameko_iso,
    mu,
    sum_phuc_dimension,
    validate_dlP,
    wood_trivial,
)
from .hit import (
    HitTrace,
    QuotientBasis,
    admissible_basis,
    dim_q,
    dim_q_omega,
    dim_q_zero_via_formula,
    hit_span,
    hit_trace,
    is_admissible,
    is_hit,
    kameko_down,
    kameko_kernel_dim,
    kameko_map,
    ks_criterion,
    reduce_to_admissible,
    singer_zero,
)
from .invariants import (
    GroupSpec,
    invariant_dim,
    invariant_dim_omega,
    invariants_omega,
    is_invariant,
)
from .linalg import DegreeContext, EchelonSpan, ResourceLimitError, intersect_dim
from .maps import PsiSpec, psi, q_insert, verify_sum_conjecture
from .monomial import (
    Monomial,
    compare,
    is_positive_support,
    is_spike,
    minimal_spike,
    weight_degree,
    weight_vector,
)
from .poly import Polynomial, SubstitutionMap, substitute
from .steenrod import sq, sq_monomial

__version__ = "0.1.0"

__all__ = [
    "DegreeContext",
    "EchelonSpan",
    "GenericDegreeSpec",
    "GroupSpec",
    "HitTrace",
    "Monomial",
    "Polynomial",
    "PsiSpec",
    "QuotientBasis",
    "ResourceLimitError",
    "SubstitutionMap",
    "admissible_basis",
    "alpha",
    "binom_mod2",
    "compare",
    "dim_q",
    "dim_q_omega",
    "dim_q_zero_via_formula",
    "generic_degree",
    "hit_span",
    "hit_trace",
    "intersect_dim",
    "invariant_dim",
    "invariant_dim_omega",
    "invariants_omega",
    "is_admissible",
    "is_hit",
    "is_invariant",
    "is_positive_support",
    "is_spike",
    "kameko_down",
    "kameko_iso",
    "kameko_kernel_dim",
    "kameko_map",
    "ks_criterion",
    "minimal_spike",
    "mu",
    "psi",
    "q_insert",
    "reduce_to_admissible",
    "singer_zero",
    "sq",
    "sq_monomial",
    "substitute",
    "sum_phuc_dimension",
    "validate_dlP",
    "verify_sum_conjecture",
    "weight_degree",
    "weight_vector",
    "wood_trivial",
]
