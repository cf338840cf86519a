"""Exact constructions for quasi-twisted codes over small finite fields.

Thin wrapper around the compiled `_core` module: finite-field and
polynomial arithmetic, quasi-twisted code construction and canonical
forms, Euclidean/symplectic/Hermitian duals with brute-force oracles,
self-orthogonality and CSS checks, additive constacyclic conversion via
trace inner products, and exact minimum-distance enumeration.
"""

from ._core import (  # noqa: F401
    Basis,
    Code,
    AdditiveCode,
    DistanceReport,
    DualResult,
    css_check,
    css_parameters,
    factor,
    find_basis,
    parse_code,
    reproduce,
    reproduce_targets,
)

__all__ = [
    "Basis",
    "Code",
    "AdditiveCode",
    "DistanceReport",
    "DualResult",
    "css_check",
    "css_parameters",
    "factor",
    "find_basis",
    "parse_code",
    "reproduce",
    "reproduce_targets",
]
