"""Exact double Schubert, Grothendieck, Lascoux and key polynomials."""

from ._orthodontia import (
    Polynomial,
    ambiguity_report,
    double_grothendieck,
    double_schubert,
    graded_positive,
    grothendieck,
    key,
    lascoux,
    lascoux_expand,
    pipe_dream_count,
    rothe,
    schubert,
    script_G,
    script_S,
    theorem12_check,
    verify,
    verify_suites,
    weight_sum,
)

__all__ = [
    "Polynomial",
    "ambiguity_report",
    "double_grothendieck",
    "double_schubert",
    "graded_positive",
    "grothendieck",
    "key",
    "lascoux",
    "lascoux_expand",
    "pipe_dream_count",
    "rothe",
    "schubert",
    "script_G",
    "script_S",
    "theorem12_check",
    "verify",
    "verify_suites",
    "weight_sum",
]
