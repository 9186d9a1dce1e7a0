"""Exact-arithmetic toolkit for LP complementation and its combinatorics."""

from .ratlp import (
    LinearProgram,
    LpOutcome,
    Rational,
    RationalMatrix,
    Sense,
    check_feasible,
    dual,
    parse_rational,
    solve,
)

__all__ = [
    "LinearProgram",
    "LpOutcome",
    "Rational",
    "RationalMatrix",
    "Sense",
    "check_feasible",
    "dual",
    "parse_rational",
    "solve",
]
