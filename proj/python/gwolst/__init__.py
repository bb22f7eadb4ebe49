"""Wolstenholme-type congruences over the Gaussian integers.

Thin wrapper around the C++ core; see the individual functions on
``gwolst._core`` for the full surface.
"""

from ._core import (
    bernoulli,
    classify,
    composite_scan,
    expected_exponent,
    gauss_binom,
    gauss_power_sum,
    glaisher_valuation,
    gpoly,
    gpoly_low_check,
    gpoly_pattern,
    harmonic,
    quartic_fraction_residue,
    leudesdorf_valuation,
    lucas_check,
    power_sum_residue,
    reciprocal,
    scan,
    sum_exact,
    sum_modular,
    shifted_product_check,
    binomial_congruence_check,
    tuple_denominator,
    tuple_numerator,
    valuation_int,
    verify_factored_form,
    wolstenholme_valuation,
)

__all__ = [
    "bernoulli",
    "classify",
    "composite_scan",
    "expected_exponent",
    "gauss_binom",
    "gauss_power_sum",
    "glaisher_valuation",
    "gpoly",
    "gpoly_low_check",
    "gpoly_pattern",
    "harmonic",
    "quartic_fraction_residue",
    "leudesdorf_valuation",
    "lucas_check",
    "power_sum_residue",
    "reciprocal",
    "scan",
    "sum_exact",
    "sum_modular",
    "shifted_product_check",
    "binomial_congruence_check",
    "tuple_denominator",
    "tuple_numerator",
    "valuation_int",
    "verify_factored_form",
    "wolstenholme_valuation",
]
