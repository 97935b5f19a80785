"""Exact computation of Stirling numbers of both kinds, inter-kind
conversions, brute-force oracles, and a mechanically verified identity
catalog. No floating point anywhere."""

__version__ = "0.1.0"

from .exact import (
    DEFAULT_INDEX_CAP,
    IndexLimitError,
    ResourceLimitError,
    binomial,
    check_index,
    factorial,
    format_int,
    format_rational,
    parse_int,
    parse_rational,
)
from .engine import (
    PerturbedCalculator,
    StirlingCalculator,
    StirlingKind,
    Triangle,
    build_triangle,
    first_from_second,
    second_from_first,
    shared_calculator,
    stirling,
)
from .oracle import (
    BudgetExceededError,
    DEFAULT_ENUMERATION_BUDGET,
    count_permutations_by_cycles,
    count_set_partitions,
)
from .poly import (
    Poly,
    basis_poly_first,
    basis_poly_second,
    linear_coefficient,
    poly_eval,
    residual_poly_first,
    residual_poly_second,
)
from .identities import (
    Counterexample,
    IdentityId,
    IdentityReport,
    check_deriv_relation_first,
    check_deriv_relation_second,
    check_orthogonality,
    check_row_relation_first,
    check_row_relation_second,
    check_unit_sum_first,
    check_unit_sum_second,
    run_all,
    run_identity,
)

__all__ = [
    "DEFAULT_ENUMERATION_BUDGET",
    "DEFAULT_INDEX_CAP",
    "BudgetExceededError",
    "Counterexample",
    "IdentityId",
    "IdentityReport",
    "IndexLimitError",
    "PerturbedCalculator",
    "Poly",
    "ResourceLimitError",
    "StirlingCalculator",
    "StirlingKind",
    "Triangle",
    "basis_poly_first",
    "basis_poly_second",
    "binomial",
    "build_triangle",
    "check_deriv_relation_first",
    "check_deriv_relation_second",
    "check_index",
    "check_orthogonality",
    "check_row_relation_first",
    "check_row_relation_second",
    "check_unit_sum_first",
    "check_unit_sum_second",
    "count_permutations_by_cycles",
    "count_set_partitions",
    "factorial",
    "first_from_second",
    "format_int",
    "format_rational",
    "linear_coefficient",
    "parse_int",
    "parse_rational",
    "poly_eval",
    "residual_poly_first",
    "residual_poly_second",
    "run_all",
    "run_identity",
    "second_from_first",
    "shared_calculator",
    "stirling",
]
