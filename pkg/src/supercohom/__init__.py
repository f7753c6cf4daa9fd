"""Cohomology of Z-graded Lie superalgebras with trivial coefficients.

The cochain complex is split into minimal subcomplexes; each is checked
over F_p first and exact work runs only where cohomology can survive.
"""

from .algebra import (
    Superalgebra,
    build_algebra,
    family_lowest_grade,
    parse_family,
    validate_structure,
)
from .algebra_io import load as load_algebra, save as save_algebra
from .cochain import Cochain, CochainComplex, complex_of, format_monomial
from .engine import (
    CohomologyResult,
    EngineConfig,
    betti_table,
    compute_cohomology,
    cup_product,
    is_coboundary,
    modular_dimension,
    required_grade_max,
)
from .subcomplex import Subcomplex, construct_subcomplex, partition_complex
from ._kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Cochain",
    "CochainComplex",
    "CohomologyResult",
    "EngineConfig",
    "Subcomplex",
    "Superalgebra",
    "betti_table",
    "build_algebra",
    "complex_of",
    "compute_cohomology",
    "construct_subcomplex",
    "cup_product",
    "family_lowest_grade",
    "format_monomial",
    "is_coboundary",
    "load_algebra",
    "modular_dimension",
    "parse_family",
    "partition_complex",
    "required_grade_max",
    "save_algebra",
    "validate_structure",
]
