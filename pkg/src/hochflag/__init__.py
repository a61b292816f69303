"""Exact combinatorial verification toolkit.

Three mutually cross-checking routes to the same numbers: symbolic
structure constants in the Iwahori-Hecke algebra of the symmetric group,
exhaustive enumeration of flags over small prime fields, and direct
Hochschild cohomology of finite-dimensional presented algebras.  The
headline identity they verify is that the Euler characteristic of the
Hochschild cohomology of the principal block of category O for sl_n
equals n!.
"""

from .errors import NonIntegralInterpolationError, PresentationError, ResourceLimitError
from .flags import (
    Flag,
    UnipotentMatrix,
    canonical_cell_point,
    count_all_triples,
    count_middle_flags,
    count_stratum_triples,
    enumerate_flags,
    enumerate_unipotent,
    flag_count,
    relative_position,
    standard_flag,
)
from .hecke import (
    HeckeElement,
    mul,
    mul_by_generator,
    specialize,
    structure_coefficient,
    t_w0_squared,
)
from .hochschild import (
    AlgebraPresentation,
    HHReport,
    bar_hh_dimensions,
    builtin,
    center_dimension,
    cochain_dimension,
    differential_matrix,
    hh_dimensions,
    load_presentation,
    save_presentation,
    validate,
)
from .polynomial import IntPolynomial, lagrange_interpolate
from .triples import (
    CrossValidationReport,
    StratumReport,
    VanishingReport,
    all_stratum_polynomials,
    cross_validate,
    euler_characteristic,
    stratum_polynomial,
    total_polynomial,
    verify_vanishing,
)
from .weyl import (
    all_permutations,
    compose,
    identity,
    inverse,
    length,
    length_generating_function,
    longest_element,
    reduced_word,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraPresentation",
    "CrossValidationReport",
    "Flag",
    "HHReport",
    "HeckeElement",
    "IntPolynomial",
    "NonIntegralInterpolationError",
    "PresentationError",
    "ResourceLimitError",
    "StratumReport",
    "UnipotentMatrix",
    "VanishingReport",
    "all_permutations",
    "all_stratum_polynomials",
    "bar_hh_dimensions",
    "builtin",
    "canonical_cell_point",
    "center_dimension",
    "cochain_dimension",
    "compose",
    "count_all_triples",
    "count_middle_flags",
    "count_stratum_triples",
    "cross_validate",
    "differential_matrix",
    "enumerate_flags",
    "enumerate_unipotent",
    "euler_characteristic",
    "flag_count",
    "hh_dimensions",
    "identity",
    "inverse",
    "lagrange_interpolate",
    "length",
    "length_generating_function",
    "load_presentation",
    "longest_element",
    "mul",
    "mul_by_generator",
    "relative_position",
    "reduced_word",
    "save_presentation",
    "specialize",
    "standard_flag",
    "stratum_polynomial",
    "structure_coefficient",
    "t_w0_squared",
    "total_polynomial",
    "validate",
    "verify_vanishing",
]
