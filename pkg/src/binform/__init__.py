"""Exact arithmetic for binary-form transvectants, their quadratic syzygies,
Wigner recoupling symbols, and symmetric-group projection operators."""

from .polycore import (
    MultiForm,
    Rational,
    add,
    bracket,
    bracket_power,
    evaluate,
    exact_divide,
    from_json_dict,
    linear_substitute,
    mul,
    negate,
    omega,
    omega_power,
    polarize,
    scale,
    substitute_pair,
    to_json_dict,
)
from .transvectant import (
    BinaryForm,
    factor_f,
    factor_g,
    factor_h,
    jacobian_exchange_check,
    project_pi,
    random_binary_form,
    section_iota,
    trace_element,
    transvect,
    transvect_derivative,
)
from .syzygy import (
    SyzygyTable,
    VerifyResult,
    closed_form_table,
    kappa,
    kappa_oracle,
    kappa_support,
    minimal_equation_u1_check,
    pi_set,
    reconstruct,
    segre22_identity_check,
    u2_u3_formulas,
    vartheta_table,
    verify_table,
)
from .wigner import (
    HalfInt,
    NineJArray,
    QuadraticSurd,
    coupling_coefficient,
    is_stretched,
    is_triad,
    kappa_via_ninej,
    ninej_operator,
    ninej_support_size,
    ninej_symmetry_check,
    ninej_triple_sum,
    sixj,
    threej,
)
from .symgroup import (
    ConjectureReport,
    RepMatrix,
    S5Report,
    StandardTableau,
    character,
    generator_matrices,
    hook_dimension,
    multiplicity,
    partitions,
    projection_matrix,
    relation_residual_vanishes,
    rep_matrix,
    standard_tableaux,
    test_conjecture,
    verify_s5_syzygy,
)

__all__ = [
    "MultiForm",
    "Rational",
    "add",
    "bracket",
    "bracket_power",
    "evaluate",
    "exact_divide",
    "from_json_dict",
    "linear_substitute",
    "mul",
    "negate",
    "omega",
    "omega_power",
    "polarize",
    "scale",
    "substitute_pair",
    "to_json_dict",
    "BinaryForm",
    "factor_f",
    "factor_g",
    "factor_h",
    "jacobian_exchange_check",
    "project_pi",
    "random_binary_form",
    "section_iota",
    "trace_element",
    "transvect",
    "transvect_derivative",
    "SyzygyTable",
    "VerifyResult",
    "closed_form_table",
    "kappa",
    "kappa_oracle",
    "kappa_support",
    "minimal_equation_u1_check",
    "pi_set",
    "reconstruct",
    "segre22_identity_check",
    "u2_u3_formulas",
    "vartheta_table",
    "verify_table",
    "HalfInt",
    "NineJArray",
    "QuadraticSurd",
    "coupling_coefficient",
    "is_stretched",
    "is_triad",
    "kappa_via_ninej",
    "ninej_operator",
    "ninej_support_size",
    "ninej_symmetry_check",
    "ninej_triple_sum",
    "sixj",
    "threej",
    "ConjectureReport",
    "RepMatrix",
    "S5Report",
    "StandardTableau",
    "character",
    "generator_matrices",
    "hook_dimension",
    "multiplicity",
    "partitions",
    "projection_matrix",
    "relation_residual_vanishes",
    "rep_matrix",
    "standard_tableaux",
    "test_conjecture",
    "verify_s5_syzygy",
]

__version__ = "0.1.0"
