"""Finitely-presented quantum algebras: R-matrix, presentations, rewriting, audits, morphisms."""

from .audit import (
    graded_dimension_audit,
    golden_audit,
    ideal_member,
    linear_normal_form,
    straightening_audit,
)
from .freealg import FreeAlgElem, FreeMatrix, slot1, slot2
from .identities import check_matrix_identity, identity_suite, quantum_determinant
from .linalg import SparseEchelon, rank_of
from .morphisms import Morphism, build_morphism, check_morphism
from .presentations import PRESENTATION_NAMES, Presentation, build_presentation
from .rewriting import RewriteSystem, check_confluence, rewrite_system, straighten
from .rmatrix import NumericRMatrix, check_r_constants, r_matrix

__all__ = [
    "FreeAlgElem",
    "FreeMatrix",
    "Morphism",
    "NumericRMatrix",
    "PRESENTATION_NAMES",
    "Presentation",
    "RewriteSystem",
    "SparseEchelon",
    "build_morphism",
    "build_presentation",
    "check_confluence",
    "check_matrix_identity",
    "check_morphism",
    "check_r_constants",
    "golden_audit",
    "graded_dimension_audit",
    "identity_suite",
    "ideal_member",
    "linear_normal_form",
    "quantum_determinant",
    "r_matrix",
    "rank_of",
    "rewrite_system",
    "slot1",
    "slot2",
    "straighten",
    "straightening_audit",
]
