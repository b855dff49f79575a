"""Index-2 quasi-cyclic codes over finite fields and the stabilizer quantum
codes they induce: construction, self-orthogonality certification under the
symplectic/Euclidean/Hermitian forms, and certified distance lower bounds."""

from . import errors
from .cyclic import (
    DEFAULT_BUDGET,
    DEFAULT_MC_SAMPLES,
    CyclicCode,
    DistanceBound,
    bch_lower_bound,
    coset_generator_poly,
    cyclic_dim,
    cyclotomic_cosets,
    min_distance,
    root_exponents,
    splitting_field,
    xn1_factors,
)
from .field import (
    FieldElement,
    FieldSpec,
    element_arithmetic,
    frobenius,
    make_field,
    multiplicative_order,
    subfield_embed,
    subfield_project,
)
from .poly import (
    Poly,
    Residue,
    check_polynomial,
    divides,
    dual_generator,
    poly_divmod,
    poly_gcd,
    poly_gcd_lcm,
    poly_lcm,
    q_power_map,
    reciprocal_bar,
    residue_ops,
    xn1,
)
from .qc import (
    DualForm,
    OrthCondition,
    QCCode,
    check_self_orth_condition,
    css_min_weight,
    d_q_bound,
    d_qe_bound,
    dual_generators,
    dual_matrix,
    exact_qc_distance,
    generator_matrix,
    h_admissible,
    h_shortcut_tests,
    inner_product,
    qc_build,
    qc_build_reduced,
    symplectic_weight,
    trace_h,
    verify_orthogonality,
)
from .quantum import QuantumParams, css_generic, derive_params

__version__ = "0.1.0"

__all__ = [
    "CyclicCode", "DistanceBound", "DualForm", "FieldElement", "FieldSpec",
    "OrthCondition", "Poly", "QCCode", "QuantumParams", "Residue",
    "bch_lower_bound", "check_polynomial", "check_self_orth_condition",
    "coset_generator_poly", "css_generic", "css_min_weight", "cyclic_dim",
    "cyclotomic_cosets", "d_q_bound", "d_qe_bound", "derive_params",
    "divides", "dual_generator", "dual_generators", "dual_matrix",
    "element_arithmetic", "errors",
    "exact_qc_distance", "frobenius", "generator_matrix", "h_admissible",
    "h_shortcut_tests", "inner_product", "make_field", "min_distance",
    "multiplicative_order", "poly_divmod", "poly_gcd", "poly_gcd_lcm",
    "poly_lcm", "q_power_map", "qc_build", "qc_build_reduced",
    "reciprocal_bar", "residue_ops", "root_exponents", "splitting_field",
    "subfield_embed", "subfield_project", "symplectic_weight", "trace_h",
    "verify_orthogonality", "xn1_factors",
    "xn1", "DEFAULT_BUDGET", "DEFAULT_MC_SAMPLES",
]
