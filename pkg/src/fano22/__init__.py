"""Exact-arithmetic verification of the degree-22 Fano threefold computations.

A small computer-algebra core (sparse rational polynomials, fraction-free
linear algebra, graded section spaces, parametric group actions, rational
maps) plus named verification suites binding the explicit constants of
the classification to those operations.
"""

from .constants import DEFAULT_RAW, PaperConstants, random_mutation
from .linalg import ExactMatrix
from .parsing import ParseError, parse
from .poly import Derivation, Polynomial, Registry, RegistryMismatch, format_poly
from .sections import Grading, SectionSpace, UnboundedDegreeCone, monomial_basis
from .suites import (
    Check,
    CheckReport,
    SUITE_ORDER,
    SuiteConfig,
    UnknownSuite,
    render_text,
    reports_to_json,
    run_all,
    run_suite,
)

__all__ = [
    "DEFAULT_RAW",
    "PaperConstants",
    "random_mutation",
    "ExactMatrix",
    "ParseError",
    "parse",
    "Derivation",
    "Polynomial",
    "Registry",
    "RegistryMismatch",
    "format_poly",
    "Grading",
    "SectionSpace",
    "UnboundedDegreeCone",
    "monomial_basis",
    "Check",
    "CheckReport",
    "SUITE_ORDER",
    "SuiteConfig",
    "UnknownSuite",
    "render_text",
    "reports_to_json",
    "run_all",
    "run_suite",
]

__version__ = "0.1.0"
