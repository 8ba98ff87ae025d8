"""
dahaverify: exact operator calculus and machine verification for
cyclotomic double affine Hecke algebras, Macdonald polynomials, GKLO
difference operators and R-matrix algebras.
"""

from .config import SuiteConfig, build_config, load_config_file
from .errors import DahaVerifyError
from .report import CheckStatus, Report, ReportBuilder
from .scalars import ParamContext
from .suites import run_suite

__version__ = "1.0.0"

__all__ = [
    "CheckStatus",
    "DahaVerifyError",
    "ParamContext",
    "Report",
    "ReportBuilder",
    "SuiteConfig",
    "build_config",
    "load_config_file",
    "run_suite",
]
