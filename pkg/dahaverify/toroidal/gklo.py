"""
GKLO images of the shifted quantum toroidal algebra.

Modes e_r, f_r become single-shift difference operators in x_1..x_n and
the psi currents become multiplication by the expansions of one rational
function in z^-1 (psi+) or z (psi-). With ``t_inverted`` every t in the
formulas below is read as t^-1.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import BadIndex, ConfigError, MalformedOperator, ZeroMode
from ..laurent import LaurentPoly, RationalCoeff, identity_perm, power_sum
from ..logs import get_logger
from ..qdo import DRO, row_coefficient, single_shift
from ..scalars import Scalar, ScalarField
from .series import TruncatedSeries

log = get_logger(__name__)

MODE_KINDS = ("e", "f")


@dataclass(frozen=True)
class GKLOContext:
    n: int
    ell: int
    Z: Tuple[Scalar, ...]
    field: ScalarField
    t_inverted: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise BadIndex("rank must be positive", {"n": self.n})
        if len(self.Z) != self.ell:
            raise ConfigError("Z must have ell entries", {"ell": self.ell, "Z": len(self.Z)})
        if any(self.field.is_zero(z) for z in self.Z):
            raise ConfigError("Z entries must be nonzero")

    @classmethod
    def generic(cls, field: ScalarField, n: int, ell: Optional[int] = None, t_inverted: bool = False) -> "GKLOContext":
        ell = field.ell if ell is None else ell
        return cls(n, ell, tuple(field.z(a) for a in range(1, ell + 1)), field, t_inverted)

    @classmethod
    def from_literals(cls, field: ScalarField, n: int, values: Sequence[Fraction]) -> "GKLOContext":
        return cls(n, len(values), tuple(field.from_fraction(Fraction(v)) for v in values), field)

    def tp(self, k: int) -> Scalar:
        return self.field.t_pow(-k if self.t_inverted else k)

    def qt(self, a: int, b: int) -> Scalar:
        return self.field.q_pow(a) * self.tp(b)

    def psi_minus_leading(self) -> Scalar:
        """psi-_ell = prod_a (-Z_a / q)."""
        f = self.field
        out = f.one
        for z in self.Z:
            out = out * (-z) * f.q_pow(-1)
        return out


@dataclass(frozen=True)
class ModeWindow:
    rmin: int
    rmax: int

    def __post_init__(self) -> None:
        if self.rmin > self.rmax:
            raise ConfigError("empty mode window", {"rmin": self.rmin, "rmax": self.rmax})

    @property
    def span(self) -> int:
        return self.rmax - self.rmin + 1

    def modes(self) -> List[int]:
        return list(range(self.rmin, self.rmax + 1))

    def pairs(self) -> List[Tuple[int, int]]:
        return [(r, s) for r in self.modes() for s in self.modes()]

    def sorted_triples(self) -> List[Tuple[int, int, int]]:
        m = self.modes()
        return [(a, b, c) for a in m for b in m if b >= a for c in m if c >= b]

    def check_span(self, bound: int) -> None:
        if self.span > bound:
            raise ConfigError("mode window too wide", {"span": self.span, "bound": bound})


def cubic_coefficients(ctx: GKLOContext) -> Tuple[List[Scalar], List[Scalar]]:
    """Coefficients g_k, gt_k of z^{3-k} w^k in

    g(z, w)  = (z - q^2 w)(z - t^2 w)(z - q^-2 t^-2 w)
    gt(z, w) = (q^2 z - w)(t^2 z - w)(q^-2 t^-2 z - w)
    """
    f = ctx.field
    roots = [ctx.qt(2, 0), ctx.qt(0, 2), ctx.qt(-2, -2)]
    g = [f.one]
    for a in roots:
        # multiply by (z - a w)
        g = [(g[k] if k < len(g) else f.zero) - (a * g[k - 1] if k >= 1 else f.zero) for k in range(len(g) + 1)]
    gt = [f.one]
    for b in roots:
        # multiply by (b z - w)
        gt = [(b * gt[k] if k < len(gt) else f.zero) - (gt[k - 1] if k >= 1 else f.zero) for k in range(len(gt) + 1)]
    return g, gt


def structure_constant(ctx: GKLOContext) -> Scalar:
    """kappa = (1 - q^2)(1 - t^2)(1 - q^-2 t^-2)."""
    f = ctx.field
    return (f.one - ctx.qt(2, 0)) * (f.one - ctx.qt(0, 2)) * (f.one - ctx.qt(-2, -2))


def check_mode_shape(op: DRO, exponent: int) -> None:
    """Every term must be a pure single-variable shift by the given exponent."""
    for perm, mu in op.terms:
        nonzero = [m for m in mu if m]
        if perm != identity_perm(op.n) or nonzero != [exponent]:
            raise MalformedOperator("GKLO mode has unexpected term shape", {"perm": perm, "shift": mu})


class GKLOImages:
    """Cached mode operators and psi expansions for one context."""

    def __init__(self, ctx: GKLOContext):
        self.ctx = ctx
        self._modes: Dict[Tuple[str, int], DRO] = {}
        self._psi: Dict[str, TruncatedSeries] = {}

    def _z_factor(self, i: int) -> LaurentPoly:
        """prod_a (1 - Z_a q^-1 x_i^-1)."""
        f, n = self.ctx.field, self.ctx.n
        out = LaurentPoly.one(f, n)
        for z in self.ctx.Z:
            out = out - out * LaurentPoly.variable(f, n, i, -1).scale(z * f.q_pow(-1))
        return out

    def mode(self, kind: str, r: int) -> DRO:
        if kind not in MODE_KINDS:
            raise BadIndex(f"unknown mode kind {kind!r}")
        key = (kind, r)
        if key not in self._modes:
            self._modes[key] = self._build(kind, r)
        return self._modes[key]

    def _build(self, kind: str, r: int) -> DRO:
        ctx, f, n = self.ctx, self.ctx.field, self.ctx.n
        out = DRO.zero(f, n)
        if kind == "e":
            prefactor = f.inv(f.q_pow(-2) - f.one)
            for i in range(n):
                coef = row_coefficient(f, n, i, f.one, -ctx.tp(-2))
                coef = coef * (LaurentPoly.variable(f, n, i, r) * self._z_factor(i))
                out = out + DRO.term(f, n, coef.scale(prefactor), single_shift(n, i, -2))
            check_mode_shape(out, -2)
        else:
            prefactor = f.inv(f.one - f.q_pow(2))
            for i in range(n):
                coef = row_coefficient(f, n, i, f.one, -ctx.tp(2))
                coef = coef * LaurentPoly.variable(f, n, i, r).scale(f.q_pow(2 * r))
                out = out + DRO.term(f, n, coef.scale(prefactor), single_shift(n, i, 2))
            check_mode_shape(out, 2)
        return out

    def _plus_series(self, order: int) -> TruncatedSeries:
        """psi+ in u = z^-1."""
        ctx, f, n = self.ctx, self.ctx.field, self.ctx.n
        series = TruncatedSeries.one(f, n, order)
        for z in ctx.Z:
            series = series * TruncatedSeries.linear(LaurentPoly.constant(f, n, z * f.q_pow(-1)), order)
        for i in range(n):
            x = LaurentPoly.variable(f, n, i)
            series = series * TruncatedSeries.linear(x.scale(ctx.tp(-2)), order)
            series = series * TruncatedSeries.linear(x.scale(ctx.qt(2, 2)), order)
            series = series * TruncatedSeries.geometric(x, order)
            series = series * TruncatedSeries.geometric(x.scale(f.q_pow(2)), order)
        return series

    def _minus_series(self, order: int) -> TruncatedSeries:
        """z^ell psi-(z) / psi-_ell, in z."""
        ctx, f, n = self.ctx, self.ctx.field, self.ctx.n
        series = TruncatedSeries.one(f, n, order)
        for z in ctx.Z:
            series = series * TruncatedSeries.linear(LaurentPoly.constant(f, n, f.q_pow(1) * f.inv(z)), order)
        for i in range(n):
            xinv = LaurentPoly.variable(f, n, i, -1)
            series = series * TruncatedSeries.linear(xinv.scale(ctx.tp(2)), order)
            series = series * TruncatedSeries.linear(xinv.scale(ctx.qt(-2, -2)), order)
            series = series * TruncatedSeries.geometric(xinv, order)
            series = series * TruncatedSeries.geometric(xinv.scale(f.q_pow(-2)), order)
        return series

    def series(self, sign: str, order: int) -> TruncatedSeries:
        cached = self._psi.get(sign)
        if cached is None or cached.order < order:
            cached = self._plus_series(order) if sign == "+" else self._minus_series(order)
            self._psi[sign] = cached
            log.debug("gklo.psi_series", sign=sign, order=order, n=self.ctx.n, ell=self.ctx.ell)
        return cached

    def psi(self, sign: str, s: int) -> LaurentPoly:
        """Mode psi^{sign}_s as a Laurent polynomial; zero outside the support."""
        f, n = self.ctx.field, self.ctx.n
        if sign == "+":
            if s < 0:
                return LaurentPoly.zero(f, n)
            return self.series("+", s + 1).coefficient(s)
        if sign == "-":
            k = self.ctx.ell - s
            if k < 0:
                return LaurentPoly.zero(f, n)
            return self.series("-", k + 1).coefficient(k).scale(self.ctx.psi_minus_leading())
        raise BadIndex(f"unknown psi sign {sign!r}")

    def psi_operator(self, sign: str, s: int) -> DRO:
        return DRO.multiplication(self.psi(sign, s))


@lru_cache(maxsize=32)
def gklo_images(ctx: GKLOContext) -> GKLOImages:
    return GKLOImages(ctx)


def gklo_mode(kind: str, r: int, ctx: GKLOContext) -> DRO:
    return gklo_images(ctx).mode(kind, r)


def psi_mode(sign: str, s: int, ctx: GKLOContext) -> LaurentPoly:
    return gklo_images(ctx).psi(sign, s)


def b_symbol(m: int, ctx: GKLOContext) -> LaurentPoly:
    """Symmetric Laurent polynomial of the logarithmic generator b_m."""
    if m == 0:
        raise ZeroMode("b_0 is not defined")
    f, n = ctx.field, ctx.n
    k = abs(m)
    if m > 0:
        scalar = (f.one - ctx.tp(-2 * k)) * (f.one - ctx.qt(2 * k, 2 * k))
        zsum = f.zero
        for z in ctx.Z:
            zsum = zsum + f.power(z, k)
        return power_sum(f, n, k).scale(scalar) - LaurentPoly.constant(f, n, f.q_pow(-k) * zsum)
    scalar = (f.one - ctx.tp(2 * k)) * (f.one - ctx.qt(-2 * k, -2 * k))
    zsum = f.zero
    for z in ctx.Z:
        zsum = zsum + f.power(z, -k)
    bracket = power_sum(f, n, -k).scale(scalar) - LaurentPoly.constant(f, n, f.q_pow(k) * zsum)
    return bracket.scale(ctx.psi_minus_leading())


def gklo_b(m: int, ctx: GKLOContext) -> DRO:
    return DRO.multiplication(b_symbol(m, ctx))


def log_series_b(ctx: GKLOContext, order: int) -> Dict[int, LaurentPoly]:
    """b_{+-m}, 1 <= m <= order, read off the logarithms of the psi series.

    b_{-m} is returned with the psi-_ell prefactor, matching b_symbol.
    """
    images = gklo_images(ctx)
    f = ctx.field
    out: Dict[int, LaurentPoly] = {}
    plus = images.series("+", order + 1).log()
    minus = images.series("-", order + 1).log()
    lead = ctx.psi_minus_leading()
    for m in range(1, order + 1):
        out[m] = plus.coefficient(m).scale(f.from_int(m))
        out[-m] = minus.coefficient(m).scale(f.from_int(m) * lead)
    return out
