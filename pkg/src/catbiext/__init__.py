"""Exact arithmetic for categorical extensions and biextensions of finite
abelian groups with Picard-groupoid coefficients."""

from .groups import (
    CapExceededError,
    DEFAULT_ENUMERATION_CAP,
    FinAbGroup,
    GroupElement,
    GroupParseError,
    Homomorphism,
    InvariantFactors,
    LatticeError,
    enumerate_group,
    kernel_basis,
    lattice_quotient,
    parse_group,
    smith_normal_form,
    solve_mod,
    subquotient,
)
from .picard import (
    PicardGroupoid,
    PicardValidationError,
    TorsorPresentation,
    TripleMorphism,
    canonical_torsor,
    canonical_triple,
    compose_triples,
    contracted_product,
    hom_classes,
    is_torsor,
    make_picard,
    product_class,
    q_invariant,
    suspension,
    triples_equivalent,
)
from .cohomology import (
    Cochain,
    CohomologyGroup,
    NormalizationError,
    PicardCochain,
    PicardCohomologyGroup,
    bar_delta,
    cochain_positions,
    cohomology_group,
    coboundary_pair,
    gamma_mix,
    is_coboundary,
    is_cocycle,
    is_picard_cocycle,
    kappa,
    kappa_raw,
    les_check,
    les_connecting,
    picard_cohomology,
)
from .extension import (
    ClassificationError,
    MonBicatExtension,
    MonCatExtension,
    baer_sum,
    check_k5,
    check_pentagon,
    classify_bicat,
    classify_moncat,
    picard_class_coordinates,
)
from .biextension import (
    BiextCocycle,
    BiextensionError,
    CatBiextCocycle,
    MultiMap,
    SkeletalMonoidalDatum,
    SymBiextDatum,
    antisymmetry_witness,
    check_biext,
    check_cat_biext,
    check_symmetric,
    commutator_biextension,
    diagonal_extension,
    final_theorem_check,
    hexagon_defects,
    is_alternating,
    is_antisymmetric,
    is_trivial,
    partial_compose_1,
    partial_compose_2,
    swap_dual,
    wedge,
)
from .qcomplex import (
    BiQData,
    CDatum,
    ThetaMatrix,
    build_q2_from_extension,
    check_42,
    check_42_report,
    check_theta_44,
    face_coboundary,
    mirror_biq,
    specialize_24_to_23,
    specialize_42_to_32,
    theta_44_report,
    theta_44_residual,
    theta_specialize,
)
from .report import Report

__all__ = [name for name in dir() if not name.startswith("_")]
