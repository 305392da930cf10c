"""Squareful-number triples x + y = z: exact counts, conic local densities,
and the leading-constant series, backed by the C++ core."""

from ._core import (
    REFERENCE_CONSTANT,
    BudgetExceeded,
    ConstantEstimate,
    brute_density,
    component_tamagawa,
    conic_count,
    constant_partial,
    constant_via_y,
    count_conic_points_mod_p,
    count_squareful,
    count_ternary_points,
    count_triples,
    decompose,
    delta_0,
    delta_2,
    delta_minus1,
    enumerate_squareful,
    gamma_factor,
    good_density,
    infinite_density,
    is_squareful,
    jacobi,
    legendre,
    local_density,
    mobius,
    odd_bad_density,
    peyre_constant,
    powerful_density_constant,
    sigma2,
    star_symbol,
    tail_bound,
    tamagawa,
)

__all__ = [
    "REFERENCE_CONSTANT",
    "BudgetExceeded",
    "ConstantEstimate",
    "brute_density",
    "component_tamagawa",
    "conic_count",
    "constant_partial",
    "constant_via_y",
    "count_conic_points_mod_p",
    "count_squareful",
    "count_ternary_points",
    "count_triples",
    "decompose",
    "delta_0",
    "delta_2",
    "delta_minus1",
    "enumerate_squareful",
    "gamma_factor",
    "good_density",
    "infinite_density",
    "is_squareful",
    "jacobi",
    "legendre",
    "local_density",
    "mobius",
    "odd_bad_density",
    "peyre_constant",
    "powerful_density_constant",
    "sigma2",
    "star_symbol",
    "tail_bound",
    "tamagawa",
]
