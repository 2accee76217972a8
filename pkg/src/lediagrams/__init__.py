"""Le-diagrams, X-diagrams and the bijections between them.

The heavy lifting (pattern enumeration, the φ-type maps, orientation
sweeps) runs in a compiled kernel when one was built; ``BACKEND`` says which.
"""

from ._kernels import BACKEND
from .bijection import (
    Phi,
    Phi2,
    Phi2_inv,
    Phi_inv,
    PivotReport,
    phi,
    phi2,
    phi2_inv,
    phi_inv,
    pivot_column,
    pivot_column_dual,
)
from .census import f_polynomial, stirling_first_kind, stirling_table
from .filling import (
    Filling,
    Pattern,
    PatternClass,
    avoids,
    count_by_ones,
    enumerate_fillings,
    find_violation,
    is_le_diagram,
    parse_filling,
    render_filling,
    statistics,
)
from .polynomial import IntPolynomial, LaurentPolynomial
from .shape import Shape, classify, parse_shape, render_shape, young_shape

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Filling", "IntPolynomial", "LaurentPolynomial", "Pattern", "PatternClass",
    "Phi", "Phi2", "Phi2_inv", "Phi_inv", "PivotReport", "Shape", "avoids", "classify",
    "count_by_ones", "enumerate_fillings", "f_polynomial", "find_violation", "is_le_diagram",
    "parse_filling", "parse_shape", "phi", "phi2", "phi2_inv", "phi_inv", "pivot_column",
    "pivot_column_dual", "render_filling", "render_shape", "statistics", "stirling_first_kind",
    "stirling_table", "young_shape",
]
