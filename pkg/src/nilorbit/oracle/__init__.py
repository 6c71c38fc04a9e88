"""Brute-force checks: finite-field enumeration and exact rational centralizers."""

from .enumerate import (
    DEFAULT_BUDGET,
    VerificationReport,
    batch_jordan_types,
    batch_rank,
    enumerate_nilpotent,
    enumeration_budget,
    find_fixed_point,
    fixed_point_census,
    jordan_matrix_fq,
    jordan_type,
    nilpotent_array,
    standard_frobenius,
    twisted_fixed_space,
    twisted_frobenius_A,
    verify_orbit_stability,
)
from .field import GF, FqElement, FqMatrix, field_of_order
from .rational import centralizer_dim, in_so, jordan_matrix, orthogonal_representative, rank_exact

__all__ = [
    "DEFAULT_BUDGET",
    "GF",
    "FqElement",
    "FqMatrix",
    "VerificationReport",
    "batch_jordan_types",
    "batch_rank",
    "centralizer_dim",
    "enumerate_nilpotent",
    "enumeration_budget",
    "field_of_order",
    "find_fixed_point",
    "fixed_point_census",
    "in_so",
    "jordan_matrix",
    "jordan_matrix_fq",
    "jordan_type",
    "nilpotent_array",
    "orthogonal_representative",
    "rank_exact",
    "standard_frobenius",
    "twisted_fixed_space",
    "twisted_frobenius_A",
    "verify_orbit_stability",
]
