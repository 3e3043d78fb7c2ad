"""Compressed slant Toeplitz operators between finite-dimensional model spaces.

Quick tour::

    >>> from slantlab import monomial_inner, build, CircleFunction, slant_compression
    >>> Ka, Kb = build(monomial_inner(4)), build(monomial_inner(2))
    >>> U = slant_compression(CircleFunction.monomial(1), Ka, Kb, k=2)
    >>> U.entries.real.round().astype(int).tolist()
    [[0, 0, 0, 0], [0, 1, 0, 0]]
"""

from .characterize import (CanonicalSymbol, DefectDecomposition, NotAMemberError,
                           PreconditionError, canonical_symbol, commutator_formula_check,
                           intertwine_coset_basis, intertwine_residual, intertwine_test,
                           membership_test, shift_invariance_residual,
                           shift_invariance_test, symbol_from_defect, zero_test)
from .circle import (DEFAULT_BAND, BandError, CircleFunction, conj_fn, inner_product,
                     multiply, riesz_project, shift, slant_w, slant_w_adjoint)
from .inner import (FiniteBlaschke, compose_zk, divides, gcd_inner, lcm_inner,
                    monomial_inner, quotient, to_circle_fn)
from .model_space import (ModelSpace, SpaceElement, build, conjugate_kernel,
                          conjugation, kernel, p_alpha, project)
from .operators import (OperatorMatrix, compressed_shift, compressed_shift_adjoint_pow,
                        compressed_shift_pow, rank_one, slant_compression,
                        truncated_toeplitz)
from .products import (ProductReport, product_analytic, product_antianalytic,
                       product_corollary_special, product_membership_L2, product_mixed)

__all__ = [
    "CanonicalSymbol",
    "DefectDecomposition",
    "NotAMemberError",
    "PreconditionError",
    "canonical_symbol",
    "commutator_formula_check",
    "intertwine_coset_basis",
    "intertwine_residual",
    "intertwine_test",
    "membership_test",
    "shift_invariance_residual",
    "shift_invariance_test",
    "symbol_from_defect",
    "zero_test",
    "DEFAULT_BAND",
    "BandError",
    "CircleFunction",
    "conj_fn",
    "inner_product",
    "multiply",
    "riesz_project",
    "shift",
    "slant_w",
    "slant_w_adjoint",
    "FiniteBlaschke",
    "compose_zk",
    "divides",
    "gcd_inner",
    "lcm_inner",
    "monomial_inner",
    "quotient",
    "to_circle_fn",
    "ModelSpace",
    "SpaceElement",
    "build",
    "conjugate_kernel",
    "conjugation",
    "kernel",
    "p_alpha",
    "project",
    "OperatorMatrix",
    "compressed_shift",
    "compressed_shift_adjoint_pow",
    "compressed_shift_pow",
    "rank_one",
    "slant_compression",
    "truncated_toeplitz",
    "ProductReport",
    "product_analytic",
    "product_antianalytic",
    "product_corollary_special",
    "product_membership_L2",
    "product_mixed",
]

__version__ = "0.1.0"
