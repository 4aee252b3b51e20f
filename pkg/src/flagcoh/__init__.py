"""Exact cohomology of line bundles on the partial flag scheme of
SL_{d+1}: reduced multinomial matrices, integer Smith normal form, a
brute-force oracle, closed-form determinants and characteristic-p checks.
"""

from .combinatorics import (
    complement_bijection,
    compositions,
    delta,
    delta_via_slice,
    multinomial,
    partial_sum_S,
)
from .determinants import (
    exact_det,
    krattenthaler_det,
    proctor_det,
    simplified_det,
)
from .lattice import (
    Regime,
    enumerate_dominant_s,
    freudenthal_multiplicity,
    is_dominant,
    omega_from_alpha,
    orbit_size,
    regime,
    weyl_dimension,
)
from .modular import (
    doty_E,
    doty_factor_weight,
    epp_check,
    lambda_r_check,
    main3_deficit_check,
    multiplicity_report,
    no_p_torsion_check,
)
from .oracle import direct_cohomology, full_map_matrix, triangularity_check
from .reduced_matrix import (
    TriangularCase,
    build_matrix,
    build_sets,
    sl3_matrix,
    weight_space_report,
)
from .snf import CokernelStructure, IntMatrix, cokernel, rank_mod_p, smith

__all__ = [
    "CokernelStructure",
    "IntMatrix",
    "Regime",
    "TriangularCase",
    "build_matrix",
    "build_sets",
    "cokernel",
    "complement_bijection",
    "compositions",
    "delta",
    "delta_via_slice",
    "direct_cohomology",
    "doty_E",
    "doty_factor_weight",
    "enumerate_dominant_s",
    "epp_check",
    "exact_det",
    "freudenthal_multiplicity",
    "full_map_matrix",
    "is_dominant",
    "krattenthaler_det",
    "lambda_r_check",
    "main3_deficit_check",
    "multinomial",
    "multiplicity_report",
    "no_p_torsion_check",
    "omega_from_alpha",
    "orbit_size",
    "partial_sum_S",
    "proctor_det",
    "rank_mod_p",
    "regime",
    "simplified_det",
    "sl3_matrix",
    "smith",
    "triangularity_check",
    "weight_space_report",
    "weyl_dimension",
]
