"""GKLO images, toroidal mode relations and the spherical DAHA correspondence."""

from .correspondence import gklo_dual, measure_constant, symmetric_window, verify_correspondence
from .gklo import (
    GKLOContext,
    GKLOImages,
    ModeWindow,
    b_symbol,
    cubic_coefficients,
    gklo_b,
    gklo_images,
    gklo_mode,
    log_series_b,
    psi_mode,
    structure_constant,
)
from .relations import serre_combination, torgen_constants, toroidal_relation_checks, verify_toroidal_relations
from .series import TruncatedSeries

__all__ = [
    "GKLOContext",
    "GKLOImages",
    "ModeWindow",
    "TruncatedSeries",
    "b_symbol",
    "cubic_coefficients",
    "gklo_b",
    "gklo_dual",
    "gklo_images",
    "gklo_mode",
    "log_series_b",
    "measure_constant",
    "psi_mode",
    "serre_combination",
    "structure_constant",
    "symmetric_window",
    "torgen_constants",
    "toroidal_relation_checks",
    "verify_correspondence",
    "verify_toroidal_relations",
]
