"""Verma modules and category O over the root-reductive Lie algebras of
types A, B, C and D in infinite rank, with exact arithmetic throughout."""


from .category_o import (
    LinkageChain,
    MultiplicityTable,
    WeightClass,
    classify,
    composition_series_window,
    multiplicity,
    same_block,
    simple_weight_dim,
    strong_linkage_chain,
    verma_has_finite_length,
    verma_hom_dim,
    verma_is_simple,
    verma_weight_dim,
)
from .errors import LiecatError
from .kl import KLCache, inverse_kl_at_one, kl_poly, mu_coeff, stabilization_check
from .laurent import LaurentPolynomial
from .rootdata import (
    Root,
    RootLatticeElement,
    RootShape,
    RootSystemKind,
    Weight,
    WeightInterval,
    height,
    interval,
    kostant_partition,
    leq,
    pairing,
    parse_root,
    parse_weight,
    positive_roots,
    reflect_dot,
    rho_pairing,
    shifted_pairing,
    simple_root,
)
from .truncation import ReciprocityRow, injective_character_dim, truncated_reciprocity_table
from .weyl import (
    WeylElement,
    apply_dot,
    bruhat_leq,
    descent,
    from_word,
    length,
    longest_element,
    minimal_rank,
    multiply,
    to_reduced_word,
)

__version__ = "0.1.0"

__all__ = [
    "KLCache",
    "LaurentPolynomial",
    "LiecatError",
    "LinkageChain",
    "MultiplicityTable",
    "ReciprocityRow",
    "Root",
    "RootLatticeElement",
    "RootShape",
    "RootSystemKind",
    "Weight",
    "WeightClass",
    "WeightInterval",
    "WeylElement",
    "apply_dot",
    "bruhat_leq",
    "classify",
    "composition_series_window",
    "descent",
    "from_word",
    "height",
    "injective_character_dim",
    "interval",
    "inverse_kl_at_one",
    "kl_poly",
    "kostant_partition",
    "length",
    "leq",
    "longest_element",
    "minimal_rank",
    "mu_coeff",
    "multiplicity",
    "multiply",
    "pairing",
    "parse_root",
    "parse_weight",
    "positive_roots",
    "reflect_dot",
    "rho_pairing",
    "same_block",
    "shifted_pairing",
    "simple_root",
    "simple_weight_dim",
    "stabilization_check",
    "strong_linkage_chain",
    "to_reduced_word",
    "truncated_reciprocity_table",
    "verma_has_finite_length",
    "verma_hom_dim",
    "verma_is_simple",
    "verma_weight_dim",
]
