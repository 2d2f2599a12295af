"""Exact-arithmetic checks for the characteristic-polynomial map on matrix tuples.

The compiled core exposes the coefficient map, its differential, the graded
kernel dimensions, and the transpose-fiber witnesses over prime fields.
"""

from ._core import (
    __version__,
    char_coeffs,
    dim_v_table,
    find_prime,
    jacobian_rank,
    kernel_basis,
    nonconjugacy_check,
    primitive_root,
    q_binom,
    q_trinom,
    run_report,
    witness_f,
)

__all__ = [
    "__version__",
    "char_coeffs",
    "dim_v_table",
    "find_prime",
    "jacobian_rank",
    "kernel_basis",
    "nonconjugacy_check",
    "primitive_root",
    "q_binom",
    "q_trinom",
    "run_report",
    "witness_f",
]
