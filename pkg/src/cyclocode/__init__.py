"""Exact construction and weight distributions of reducible cyclic codes."""

from .code_family import (
    CodeParams,
    LambdaData,
    WeightDistribution,
    auto_theorem,
    build_lambda,
    codeword,
    minimal_distance,
    theorem1_distribution,
    theorem2_distribution,
    theorem3_distribution,
    validate_params,
    weight_by_tracesum,
    weights_by_enumeration,
    weights_by_tracesum,
)
from .cyclotomic import CyclotomicValue
from .finite_field import FieldSpec, build_field
from .kernels import BACKEND
from .omega import OmegaPattern, omega_bruteforce, omega_closed, omega_sum_form, omega_via_jacobi

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CodeParams", "CyclotomicValue", "FieldSpec", "LambdaData", "OmegaPattern",
    "WeightDistribution", "auto_theorem", "build_field", "build_lambda", "codeword",
    "minimal_distance", "omega_bruteforce", "omega_closed", "omega_sum_form", "omega_via_jacobi",
    "theorem1_distribution", "theorem2_distribution", "theorem3_distribution",
    "validate_params", "weight_by_tracesum", "weights_by_enumeration", "weights_by_tracesum",
]
