"""Doubly-regular tournaments, skew difference families, skew Hadamard
matrices, and exact critical-group computation."""

from ._core import (
    AbelianGroup,
    CyclotomicInt,
    GroupStructure,
    Prediction,
    SignMatrix,
    SkewDifferenceFamily,
    Tournament,
    build_cayley_drt,
    build_sz,
    build_w,
    carry_count,
    character_block_check,
    check_drt_identities,
    check_hadamard_snf,
    counting_profile,
    critical_group,
    determinant,
    ding_yuan_set,
    divisibility_product_check,
    drt_critical_group,
    drt_to_hadamard,
    drt_torsion_order,
    e_formula,
    gf_additive_group,
    gf_squares,
    hadamard_to_drt,
    is_hadamard,
    is_skew,
    jacobi_sum,
    local_snf,
    make_cyclic,
    normalize_skew_hadamard,
    p_rank,
    paley_set,
    paley_tournament,
    predict_k1,
    predict_k1_complement_order,
    predict_paley,
    predict_sz,
    predict_w,
    search_sdf,
    snf,
    snf_minor_gcd,
    structure_diff,
    validate_drt,
    validate_sdf,
    verify_stickelberger,
)

__all__ = [name for name in dir() if not name.startswith("_")]
