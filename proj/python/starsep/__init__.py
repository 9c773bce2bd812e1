"""Exact star products with separation of variables on CP^N and CH^N."""

from ._core import (
    Expr,
    StarsepError,
    alpha,
    alpha_series,
    beta,
    bordemann_series,
    c_covariant,
    coeff_a,
    hyp_series,
    lstar_dphi,
    parse,
    rstar_dbarphi,
    star_covariant,
    star_exact_fock,
    star_trunc,
    stirling2,
    suites,
    verify,
)

__all__ = [
    "Expr",
    "StarsepError",
    "alpha",
    "alpha_series",
    "beta",
    "bordemann_series",
    "c_covariant",
    "coeff_a",
    "hyp_series",
    "lstar_dphi",
    "parse",
    "rstar_dbarphi",
    "star_covariant",
    "star_exact_fock",
    "star_trunc",
    "stirling2",
    "suites",
    "verify",
]
