"""Exact arithmetic for polylogarithms at non-positive integer indices.

The package computes Li(s1,...,sr)(z) = sum_{n1>...>nr>0} n1^s1...nr^sr z^n1
as a canonical rational function in Q[z, 1/(1-z)], expands such values
through the Magnus polynomial basis of the free algebra on two
letters, and generates and verifies Q-linear functional equations
among them.  Everything is exact; no floating point anywhere.
"""

from .freealg import (
    NcPoly,
    lie_bracket,
    poly_from_json_obj,
    poly_to_json_obj,
    poly_x_to_y,
    poly_y_to_x,
)
from .magnus import (
    array_binom,
    basis_word,
    dual_array_binom,
    grade_report,
    lie_power,
    lie_power_by_brackets,
    magnus_basis_check,
    magnus_indices,
    magnus_poly,
    magnus_poly_by_products,
    magnus_to_word,
    word_to_magnus,
)
from .polylog import (
    LinComb,
    expand_to_products,
    kernel_element,
    magnus_product_identity,
    nfold_product,
    polylog_map,
    polylog_rational,
    product_letter_word,
    relation_from_record,
    relation_record,
    series_coeffs,
    series_coeffs_by_chains,
    verify_relation,
)
from .ratpoly import RatFun, euler_deriv, geom_mul, taylor_coeffs
from .words import (
    MultiIndex,
    Word,
    magnus_index,
    mpl_index,
    parse_index,
    parse_y_word,
    to_index,
    to_y_word,
    word_x_to_y,
    word_y_to_x,
)

__version__ = "0.1.0"

__all__ = [
    "MultiIndex",
    "Word",
    "mpl_index",
    "magnus_index",
    "parse_index",
    "parse_y_word",
    "to_y_word",
    "to_index",
    "word_y_to_x",
    "word_x_to_y",
    "NcPoly",
    "lie_bracket",
    "poly_x_to_y",
    "poly_y_to_x",
    "poly_to_json_obj",
    "poly_from_json_obj",
    "RatFun",
    "euler_deriv",
    "geom_mul",
    "taylor_coeffs",
    "lie_power",
    "lie_power_by_brackets",
    "magnus_poly",
    "magnus_poly_by_products",
    "basis_word",
    "array_binom",
    "dual_array_binom",
    "magnus_indices",
    "word_to_magnus",
    "magnus_to_word",
    "grade_report",
    "magnus_basis_check",
    "LinComb",
    "polylog_rational",
    "polylog_map",
    "series_coeffs",
    "series_coeffs_by_chains",
    "expand_to_products",
    "product_letter_word",
    "nfold_product",
    "magnus_product_identity",
    "kernel_element",
    "verify_relation",
    "relation_record",
    "relation_from_record",
    "__version__",
]
