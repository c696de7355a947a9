"""Localizations of affine rings at primes and their associated graded rings,
computed with standard bases under a mixed weight ordering."""

from .apps import (
    FilteredFreeModule,
    HilbertData,
    LiftedBasis,
    ResolutionPair,
    SopResult,
    hilbert_samuel,
    is_regular,
    lift_groebner,
    lift_resolution,
    lift_syzygy,
    local_dim,
    system_of_parameters,
    validate_sop,
    verify_resolution,
)
from .engine import (
    BasisResult,
    HilbertSeriesData,
    NormalFormResult,
    SyzygyModule,
    dim_and_indep_set,
    hilbert_series_monomial,
    ideal_intersection,
    ideal_membership,
    leading_ideal,
    mora_nf,
    std_basis,
    syzygies,
)
from .graal import (
    CompressedField,
    GradedPresentation,
    LocalPresentation,
    RingTower,
    build_presentation,
    build_tower,
    compress_residue_field,
    gr_presentation,
    initial_ideal,
    valuation_initial,
)
from .orderings import (
    DegLex,
    DegRevLex,
    Lex,
    MixedWeightOrder,
    OrderClass,
    classify,
    compare,
    initial_w,
    schreyer_extend,
    w_degree,
)
from .polycore import (
    QQ,
    FreeModule,
    Poly,
    PolyRing,
    RatFuncField,
    ResidueField,
    Vec,
    ratfunc_normalize,
    residue_invert,
    substitute,
)

__version__ = "0.1.0"

__all__ = [
    "FilteredFreeModule",
    "HilbertData",
    "LiftedBasis",
    "ResolutionPair",
    "SopResult",
    "hilbert_samuel",
    "is_regular",
    "lift_groebner",
    "lift_resolution",
    "lift_syzygy",
    "local_dim",
    "system_of_parameters",
    "validate_sop",
    "verify_resolution",
    "BasisResult",
    "HilbertSeriesData",
    "NormalFormResult",
    "SyzygyModule",
    "dim_and_indep_set",
    "hilbert_series_monomial",
    "ideal_intersection",
    "ideal_membership",
    "leading_ideal",
    "mora_nf",
    "std_basis",
    "syzygies",
    "CompressedField",
    "GradedPresentation",
    "LocalPresentation",
    "RingTower",
    "build_presentation",
    "build_tower",
    "compress_residue_field",
    "gr_presentation",
    "initial_ideal",
    "valuation_initial",
    "DegLex",
    "DegRevLex",
    "Lex",
    "MixedWeightOrder",
    "OrderClass",
    "classify",
    "compare",
    "initial_w",
    "schreyer_extend",
    "w_degree",
    "QQ",
    "FreeModule",
    "Poly",
    "PolyRing",
    "RatFuncField",
    "ResidueField",
    "Vec",
    "ratfunc_normalize",
    "residue_invert",
    "substitute",
]
