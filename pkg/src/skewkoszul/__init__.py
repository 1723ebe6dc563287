"""Exact probes for Koszulity and PBW bases of graded skew PBW extensions."""

from .errors import ParameterError, ParseError, PreconditionError, StructuralError
from .freealg import FieldSpec, FreeAlgebra, FreePoly, GeneratorOrder, compare_deglex, format_poly, parse_poly
from .presentation import (
    GradedQuotient,
    Presentation,
    Subspace,
    ValidationReport,
    hilbert,
    ideal_component,
    is_homogeneous_quadratic,
    quadratic_dual,
    subspace_intersect,
    subspace_sum,
    validate,
)
from .rewriting import PbwVerdict, RewriteSystem, complete, find_pbw_order, normal_form, normal_words, orient, pbw_check
from .skewpbw import ClassFlags, ExtensionData, check_graded, classify, emit_presentation, module_hilbert, validate_extension
from .koszul import (
    Bounds,
    ExtTable,
    KoszulReport,
    Verdict,
    bar_ext_table,
    diagonal_check,
    distributivity_probe,
    hilbert_duality_check,
    koszul_report,
    lattice_distributive,
)
from . import catalog
from .fileformat import parse_file, render

__version__ = "0.1.0"
