"""Exact tools for planar polynomial vector fields with factored
polynomial first integrals: field construction, critical remarkable
value detection, Christopher-Zoladek genericity checks, and verified
linearization-to-saddle certificates."""

from .bipoly import (BiPoly, CheckResult, ExactDivisionError, ParseError,
                     parse, to_string)
from .cz_check import CZReport, cz_report
from .field_ops import (FactoredIntegral, VectorField, construct_field,
                        expand, is_first_integral, lie_derivative,
                        reduce_field)
from .linearize import LinearizationCertificate, factor_split, linearize
from .remarkable import (RemarkableAnalysis, analyze,
                         critical_remarkable_values)

__all__ = [
    "BiPoly", "CheckResult", "ExactDivisionError", "ParseError",
    "parse", "to_string",
    "CZReport", "cz_report",
    "FactoredIntegral", "VectorField", "construct_field", "expand",
    "is_first_integral", "lie_derivative", "reduce_field",
    "LinearizationCertificate", "factor_split", "linearize",
    "RemarkableAnalysis", "analyze", "critical_remarkable_values",
]
