"""Minimal linear codes over GF(q).

Construct codes from defining multisets, decide minimality by
exhaustive support comparison or through the cutting-blocking-set
characterization, generate the hyperplane-union and lifted families
with their predicted weight distributions, and audit parameter bounds.
"""

from .code import (LinearCode, MinimalityReport, WeightDistribution,
                   ab_condition, build_code, codeword_of, is_minimal_exhaustive,
                   is_projective, weight_distribution)
from .blocking import (BlockingReport, CuttingReport, fold_multiplicity,
                       is_cutting_definition, is_cutting_span,
                       is_minimal_cutting, theta)
from .gf import FieldSpec, field_from_order, field_make
from .kernels import BACKEND
from .linalg import (VectorMultiset, dot, proj_normalize, project_multiset,
                     span_dim, weight_support)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BlockingReport", "CuttingReport", "FieldSpec", "LinearCode",
    "MinimalityReport", "VectorMultiset", "WeightDistribution",
    "ab_condition", "build_code", "codeword_of", "dot", "field_from_order",
    "field_make", "fold_multiplicity", "is_cutting_definition",
    "is_cutting_span", "is_minimal_cutting", "is_minimal_exhaustive",
    "is_projective", "proj_normalize", "project_multiset", "span_dim",
    "theta", "weight_distribution", "weight_support",
]
