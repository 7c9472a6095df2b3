"""Exact evaluation of trigonometric Dirichlet series at real quadratic irrationalities.

The heavy lifting lives in the C++ extension ``tds._tds``; this package
re-exports its functions.
"""

from ._tds import (
    TdsDomainError,
    TdsInternalError,
    TdsParseError,
    cocycle,
    decompose,
    evaluate,
    fixing_matrix,
    partial_sum,
    pell,
    selftest,
    special,
    verify,
)

__all__ = [
    "TdsDomainError",
    "TdsInternalError",
    "TdsParseError",
    "cocycle",
    "decompose",
    "evaluate",
    "fixing_matrix",
    "partial_sum",
    "pell",
    "selftest",
    "special",
    "verify",
]
