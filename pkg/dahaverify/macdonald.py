"""
Macdonald polynomials by eigen-solving the first Macdonald operator,
the Y-spectrum, gamma_Z eigenvalues and the matrix-level check of the
gamma_Z conjugation identity.
"""

from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .daha import CyclotomicParams, DahaRepresentation, dunkl, representation
from .errors import EigenvalueCollision, PochhammerPole, WindowTooSmall
from .laurent import (
    LaurentPoly,
    Weight,
    check_dominant,
    dominance_leq,
    dominant_weights,
    is_dominant,
    monomial_symmetric,
    power_sum,
    symmetric_expansion,
)
from .logs import get_logger
from .qdo import DRO, compose_all, dro_apply_poly, row_coefficient, single_shift
from .report import CheckStatus, Report, ReportBuilder
from .scalars import ExactField, ParamContext, Scalar, ScalarField

log = get_logger(__name__)

def macdonald_operator(n: int, field: ScalarField) -> DRO:
    """sum_i prod_{j != i} (t^2 x_i - x_j)/(x_i - x_j) tau_i^{+2}."""
    out = DRO.zero(field, n)
    for i in range(n):
        coef = row_coefficient(field, n, i, field.t_pow(2), -field.one)
        out = out + DRO.term(field, n, coef, single_shift(n, i, 2))
    return out


def dual_macdonald_operator(n: int, field: ScalarField) -> DRO:
    """sum_i prod_{j != i} (t^-2 x_i - x_j)/(x_i - x_j) tau_i^{-2}."""
    out = DRO.zero(field, n)
    for i in range(n):
        coef = row_coefficient(field, n, i, field.t_pow(-2), -field.one)
        out = out + DRO.term(field, n, coef, single_shift(n, i, -2))
    return out


def macdonald_eigenvalue(lam: Sequence[int], field: ScalarField) -> Scalar:
    n = len(lam)
    out = field.zero
    for k, part in enumerate(lam):
        out = out + field.qt(2 * part, 2 * (n - 1 - k))
    return out


def dual_macdonald_eigenvalue(lam: Sequence[int], field: ScalarField) -> Scalar:
    n = len(lam)
    out = field.zero
    for k, part in enumerate(lam):
        out = out + field.qt(-2 * part, -2 * (n - 1 - k))
    return out


def y_spectrum(lam: Sequence[int], field: ScalarField) -> Tuple[Scalar, ...]:
    """(q^{2 lam_i} t^{n - 2i + 1})_i."""
    n = len(lam)
    return tuple(field.qt(2 * part, n - 1 - 2 * k) for k, part in enumerate(lam))


def y_eigenvalue(lam: Sequence[int], f: LaurentPoly) -> Scalar:
    return f.evaluate(y_spectrum(check_dominant(lam), f.field))


class MacdonaldTable:
    """Memoised P_lambda expansions in the monomial-symmetric basis."""

    def __init__(self, field: ScalarField, n: int):
        self.field = field
        self.n = n
        self.operator = macdonald_operator(n, field)
        self._images: Dict[Weight, Dict[Weight, Scalar]] = {}
        self._entries: Dict[Weight, Dict[Weight, Scalar]] = {}
        self._polys: Dict[Weight, LaurentPoly] = {}

    def _image(self, nu: Weight) -> Dict[Weight, Scalar]:
        if nu not in self._images:
            image = dro_apply_poly(self.operator, monomial_symmetric(nu, self.n, self.field))
            self._images[nu] = symmetric_expansion(image)
        return self._images[nu]

    def _solve(self, lam: Weight) -> Dict[Weight, Scalar]:
        f = self.field
        target = self._image(lam).get(lam, f.zero)
        coeffs: Dict[Weight, Scalar] = {lam: f.one}
        lower = [
            mu for mu in dominant_weights(self.n, sum(lam))
            if mu != lam and dominance_leq(mu, lam)
        ]
        for mu in lower:
            acc = f.zero
            for nu, c in coeffs.items():
                acc = acc + self._image(nu).get(mu, f.zero) * c
            gap = self._image(mu).get(mu, f.zero) - target
            if f.is_zero(gap):
                raise EigenvalueCollision(
                    "eigenvalues coincide", {"lambda": lam, "mu": mu, "mode": f.mode}
                )
            value = f.div(-acc, gap)
            if not f.is_zero(value):
                coeffs[mu] = value
        return coeffs

    def expansion(self, lam: Sequence[int]) -> Dict[Weight, Scalar]:
        lam = check_dominant(lam)
        if lam not in self._entries:
            shift = -lam[-1] if lam and lam[-1] < 0 else 0
            if shift:
                base = self.expansion(tuple(x + shift for x in lam))
                self._entries[lam] = {
                    tuple(x - shift for x in mu): c for mu, c in base.items()
                }
            else:
                self._entries[lam] = self._solve(lam)
        return self._entries[lam]

    def poly(self, lam: Sequence[int]) -> LaurentPoly:
        lam = check_dominant(lam)
        if lam not in self._polys:
            out = LaurentPoly.zero(self.field, self.n)
            for mu, c in self.expansion(lam).items():
                out = out + monomial_symmetric(mu, self.n, self.field).scale(c)
            self._polys[lam] = out
        return self._polys[lam]

    def eigenvalue(self, lam: Sequence[int]) -> Scalar:
        return macdonald_eigenvalue(check_dominant(lam), self.field)

    def expand(self, p: LaurentPoly) -> Dict[Weight, Scalar]:
        """Coefficients of a symmetric Laurent polynomial in the P basis."""
        out: Dict[Weight, Scalar] = {}
        rest = p
        guard = 0
        while not rest.is_zero():
            guard += 1
            if guard > 10_000:
                raise WindowTooSmall("Macdonald expansion did not terminate")
            top = max(alpha for alpha in rest.terms if is_dominant(alpha))
            c = rest.terms[top]
            out[top] = c
            rest = rest - self.poly(top).scale(c)
        return out


@lru_cache(maxsize=64)
def macdonald_table(field: ScalarField, n: int) -> MacdonaldTable:
    return MacdonaldTable(field, n)


def macdonald_poly(lam: Sequence[int], n: int, field: ScalarField) -> LaurentPoly:
    return macdonald_table(field, n).poly(lam)


def pochhammer(x: Scalar, base: Scalar, m: int, field: ScalarField) -> Scalar:
    """(x; base)_m for integer m."""
    out = field.one
    if m >= 0:
        for k in range(m):
            factor = field.one - x * field.power(base, k)
            if field.is_zero(factor):
                raise PochhammerPole("Pochhammer factor vanishes", {"m": m, "k": k})
            out = out * factor
        return out
    for k in range(1, -m + 1):
        factor = field.one - x * field.power(base, -k)
        if field.is_zero(factor):
            raise PochhammerPole("Pochhammer pole", {"m": m, "k": k})
        out = out * factor
    return field.inv(out)


def gamma_eigenvalue(lam: Sequence[int], params: CyclotomicParams) -> Scalar:
    """prod_a prod_i (q^-1 t^{-2(n-i)} Z_a^-1; q^2)_{-lam_i}.

    The value of gamma_Z on P_lambda, normalised to 1 at lambda = 0. The
    base point of the i-th factor is (q t^{n-1} Z_a y_i(0))^-1 for the
    Y-spectrum y(0) = (t^{n-1}, t^{n-3}, ...).
    """
    lam = check_dominant(lam)
    f, n = params.field, len(lam)
    out = f.one
    for z in params.Z:
        zi = f.inv(z)
        for k, part in enumerate(lam):
            out = out * pochhammer(f.qt(-1, -2 * (n - 1 - k)) * zi, f.q_pow(2), -part, f)
    return out


def gamma_window(n: int, d: int) -> List[Weight]:
    """Dominant weights with sum |lam_i| <= d."""
    out = []
    for total in range(-d, d + 1):
        for lam in dominant_weights(n, total, lower=-d):
            if sum(abs(x) for x in lam) <= d:
                out.append(lam)
    return out


def verify_gamma_conjugation(
    n: int,
    params: CyclotomicParams,
    d: int,
    ctx: Optional[ParamContext] = None,
) -> Report:
    """Gamma M_X Gamma^-1 = (-1)^l (prod Z)^-1 M_D on the window."""
    f = params.field
    rep: DahaRepresentation = representation(f, n)
    table = macdonald_table(f, n)
    s = rep.symmetrizer()
    d_sum = DRO.zero(f, n)
    for i in range(1, n + 1):
        d_sum = d_sum + dunkl(i, params)
    x_sum = power_sum(f, n, -1)
    sign = f.one if params.ell % 2 == 0 else -f.one
    factor = f.div(sign, params.z_product())
    window = gamma_window(n, d)
    in_window = set(window)
    builder = ReportBuilder(
        "gamma-conjugation",
        {
            "n": n,
            "ell": params.ell,
            "degree": d,
            "mode": ctx.mode if ctx else f.mode,
            "seed": ctx.seed if ctx else 0,
        },
    )
    for lam in window:
        label = ",".join(str(x) for x in lam)

        def columns(lam: Weight = lam) -> Tuple[Dict[Weight, Scalar], Dict[Weight, Scalar]]:
            p = table.poly(lam)
            mx = table.expand(x_sum * p)
            md = table.expand(dro_apply_poly(s, dro_apply_poly(d_sum, p)))
            return mx, md

        try:
            mx, md = columns()
        except (EigenvalueCollision, PochhammerPole) as exc:
            builder.add(f"column[{label}]", CheckStatus.INCONCLUSIVE, str(exc))
            continue
        for mu in sorted(set(mx) | set(md), reverse=True):
            target = ",".join(str(x) for x in mu)
            name = f"entry[{label}->{target}]"
            if mu not in in_window:
                builder.add(name, CheckStatus.SKIPPED, "target outside window")
                continue

            def entry(lam: Weight = lam, mu: Weight = mu) -> Tuple[bool, str]:
                ratio = f.div(gamma_eigenvalue(mu, params), gamma_eigenvalue(lam, params))
                lhs = ratio * mx.get(mu, f.zero)
                rhs = factor * md.get(mu, f.zero)
                return lhs == rhs, f"{f.render(lhs)} != {f.render(rhs)}"

            builder.run(name, entry)
    return builder.build()


def verify_macdonald(n: int, degree: int, ctx: ParamContext, specialize: Sequence[int] = (2, 3)) -> Report:
    """Eigenvector, monicity, triangularity, twist, spectrum and specialization."""
    f = ctx.make_field()
    table = macdonald_table(f, n)
    rep = representation(f, n)
    s = rep.symmetrizer()
    builder = ReportBuilder("macdonald", {"n": n, "degree": degree, "mode": ctx.mode, "seed": ctx.seed})
    weights = [lam for total in range(degree + 1) for lam in dominant_weights(n, total)]
    for lam in weights:
        label = ",".join(str(x) for x in lam)

        def eigen(lam: Weight = lam) -> bool:
            p = table.poly(lam)
            image = dro_apply_poly(table.operator, p)
            return image == p.scale(table.eigenvalue(lam))

        def triangular(lam: Weight = lam) -> bool:
            exp = table.expansion(lam)
            return exp.get(lam) == f.one and all(dominance_leq(mu, lam) for mu in exp)

        builder.run(f"eigen[{label}]", eigen)
        builder.run(f"triangular[{label}]", triangular)
        if sum(lam) < degree:

            def twist(lam: Weight = lam) -> bool:
                raised = tuple(x + 1 for x in lam)
                det = LaurentPoly.monomial(f, n, (1,) * n)
                return table.poly(raised) == det * table.poly(lam)

            builder.run(f"twist[{label}]", twist)
        for k in (1, 2):
            if sum(lam) > 2:
                continue

            def spectrum(lam: Weight = lam, k: int = k) -> bool:
                p = table.poly(lam)
                fy = DRO.zero(f, n)
                for i in range(1, n + 1):
                    fy = fy + compose_all([rep.Y(i)] * k)
                image = dro_apply_poly(s, dro_apply_poly(fy, p))
                return image == p.scale(y_eigenvalue(lam, power_sum(f, n, k)))

            builder.run(f"y_spectrum[{label},p{k}]", spectrum)
    if f.is_exact:
        for k in specialize:
            special = ExactField(f.ell, t_exponent=k)
            special_table = MacdonaldTable(special, n)
            for lam in weights:
                label = ",".join(str(x) for x in lam)

                def consistent(lam: Weight = lam, k: int = k) -> bool:
                    generic = table.expansion(lam)
                    direct = special_table.expansion(lam)
                    keys = set(generic) | set(direct)
                    return all(
                        f.specialize_t(generic.get(mu, f.zero), k) == direct.get(mu, special.zero)
                        for mu in keys
                    )

                builder.run(f"specialize[t=q^{k}][{label}]", consistent)
    return builder.build()


def render_expansion(expansion: Dict[Weight, Scalar], field: ScalarField) -> str:
    """'m[2] + (c)*m[1,1]' with trailing zeros dropped from weights."""
    parts = []
    for mu in sorted(expansion, reverse=True):
        c = expansion[mu]
        trimmed = list(mu)
        while len(trimmed) > 1 and trimmed[-1] == 0:
            trimmed.pop()
        label = "m[" + ",".join(str(x) for x in trimmed) + "]"
        parts.append(label if c == field.one else f"({field.render(c)})*{label}")
    return " + ".join(parts) if parts else "0"
