"""
Exception hierarchy for dahaverify.

Every error raised by the library derives from DahaVerifyError so that
suites and the CLI can turn failures into report entries instead of
tracebacks.
"""

from typing import Any, Dict, Optional


class DahaVerifyError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        if not self.details:
            return self.message
        extra = ", ".join(f"{k}={v}" for k, v in sorted(self.details.items()))
        return f"{self.message} ({extra})"


class DivisionByZero(DahaVerifyError, ZeroDivisionError):
    """Division by a scalar or polynomial that vanishes."""


class ExhaustedDraws(DahaVerifyError):
    """Random parameter draw kept hitting the blacklist."""


class NonDominantWeight(DahaVerifyError):
    """Weight is not weakly decreasing."""


class UnequalDegree(DahaVerifyError):
    """Dominance comparison between weights of different total degree."""


class OddShiftExponent(DahaVerifyError):
    """Gaussian conjugation applied to a term with an odd shift exponent."""


class InvalidArgument(DahaVerifyError, ValueError):
    """Argument outside the accepted set (direction, operation, empty product)."""


class ShapeMismatch(InvalidArgument):
    """Matrix shapes do not fit the operation."""


class MalformedOperator(DahaVerifyError):
    """An operator has terms outside the shape its construction guarantees."""


class BadIndex(DahaVerifyError):
    """Generator index out of range for the rank."""


class EigenvalueCollision(DahaVerifyError):
    """Two comparable weights share an eigenvalue at the drawn parameters."""


class PochhammerPole(DahaVerifyError):
    """A q-Pochhammer factor vanished at the drawn parameters."""


class WindowTooSmall(DahaVerifyError):
    """A target weight left the verification window."""


class ZeroMode(DahaVerifyError):
    """Logarithmic mode b_0 requested."""


class InconsistentConstant(DahaVerifyError):
    """A proportionality constant changed across the window."""


class UnknownPresentation(DahaVerifyError):
    """Presentation or morphism name not registered."""


class RewriteBudgetExceeded(DahaVerifyError):
    """Straightening exceeded its rewrite budget."""


class DegreeOverflow(DahaVerifyError):
    """An expression exceeds the degree bound of the normal form."""


class MembershipFail(DahaVerifyError):
    """A relation image did not reduce to zero."""


class ConfigError(DahaVerifyError):
    """Invalid suite configuration."""
