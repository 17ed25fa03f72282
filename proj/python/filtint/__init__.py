"""Exact filter integrals of classical orthogonal polynomial families."""

from ._core import (
    closed_form,
    closed_form_via_recurrence,
    exact_value_as_float,
    families,
    filter_integral,
    gen,
    interlacing,
    laguerre_identities,
    numeric_filter_integral,
    value_at_zero,
    verify_family,
    wz_check,
    xn_coefficients,
    xn_mod_prime,
    xn_properties,
    xn_roots,
)

__all__ = [
    "closed_form",
    "closed_form_via_recurrence",
    "exact_value_as_float",
    "families",
    "filter_integral",
    "gen",
    "interlacing",
    "laguerre_identities",
    "numeric_filter_integral",
    "value_at_zero",
    "verify_family",
    "wz_check",
    "xn_coefficients",
    "xn_mod_prime",
    "xn_properties",
    "xn_roots",
]
