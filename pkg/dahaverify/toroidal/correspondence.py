"""
Spherical DAHA against GKLO images on the symmetric window.

The DAHA side with parameters Z and t is compared with GKLO modes built
from W_a = q^2 / Z_a and t^-1. Proportionality constants are measured on
the first nonzero instance and then required everywhere else.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..daha import CyclotomicParams, eps_dunkl, representation
from ..errors import ConfigError, InconsistentConstant
from ..laurent import LaurentPoly, Weight, dominant_weights, monomial_symmetric
from ..logs import get_logger
from ..macdonald import dual_macdonald_operator, macdonald_operator
from ..qdo import DRO, commutator, dro_apply_poly, dro_equal
from ..report import Report, ReportBuilder
from ..scalars import ParamContext, Scalar, ScalarField
from .gklo import GKLOContext, b_symbol, gklo_b, gklo_mode, log_series_b

log = get_logger(__name__)

LOG_SERIES_ORDER = 3

Instance = Tuple[Weight, LaurentPoly, LaurentPoly]


def symmetric_window(n: int, d: int) -> List[Weight]:
    return [lam for total in range(d + 1) for lam in dominant_weights(n, total)]


def gklo_dual(params: CyclotomicParams) -> GKLOContext:
    """GKLO context matching the DAHA parameters: W_a = q^2 Z_a^-1, t -> t^-1."""
    f = params.field
    w = tuple(f.q_pow(2) * f.inv(z) for z in params.Z)
    return GKLOContext(params.n, params.ell, w, f, t_inverted=True)


def measure_constant(instances: Sequence[Instance], field: ScalarField, label: str) -> Scalar:
    """C with lhs = C * rhs on every instance."""
    constant: Optional[Scalar] = None
    anchor: Optional[Weight] = None
    for lam, lhs, rhs in instances:
        if rhs.is_zero():
            continue
        alpha, value = rhs.items()[0]
        constant = field.div(lhs.coefficient(alpha), value)
        anchor = lam
        break
    if constant is None:
        raise InconsistentConstant(f"{label}: no instance with a nonzero right-hand side")
    for lam, lhs, rhs in instances:
        if lhs != rhs.scale(constant):
            raise InconsistentConstant(
                f"{label}: constant differs across the window",
                {"anchor": anchor, "instance": lam, "constant": field.render(constant)},
            )
    return constant


def _apply_chain(ops: Sequence[DRO], p: LaurentPoly) -> LaurentPoly:
    """ops[0](ops[1](...(p)))."""
    for op in reversed(ops):
        p = dro_apply_poly(op, p)
    return p


def verify_correspondence(
    n: int,
    ell: int,
    d: int,
    ctx: ParamContext,
    Z: Optional[Sequence[Fraction]] = None,
) -> Report:
    if d < 1:
        raise ConfigError("correspondence window needs d >= 1", {"d": d})
    field = ctx.make_field()
    if Z is not None:
        if len(Z) != ell:
            raise ConfigError("Z must have ell entries", {"ell": ell, "Z": list(Z)})
        params = CyclotomicParams.from_literals(field, n, Z)
    else:
        params = CyclotomicParams.generic(field, n, ell)
    gctx = gklo_dual(params)
    rep = representation(field, n)
    s = rep.symmetrizer()
    window = symmetric_window(n, d)
    sym = {lam: monomial_symmetric(lam, n, field) for lam in window}
    builder = ReportBuilder(
        "correspondence", {"n": n, "ell": ell, "d": d, "mode": ctx.mode, "seed": ctx.seed}
    )
    log.info("correspondence.start", n=n, ell=ell, d=d, weights=len(window))

    y_sum = DRO.zero(field, n)
    y_inv_sum = DRO.zero(field, n)
    for i in range(1, n + 1):
        y_sum = y_sum + rep.Y(i)
        y_inv_sum = y_inv_sum + rep.Y_inv(i)
    mac = macdonald_operator(n, field)
    dual = dual_macdonald_operator(n, field)
    for lam in window:
        builder.run(f"mac{list(lam)}", lambda lam=lam: (
            _apply_chain([s, y_sum, s], sym[lam]).scale(field.t_pow(n - 1)) == dro_apply_poly(mac, sym[lam])
        ))
        builder.run(f"dualmac{list(lam)}", lambda lam=lam: (
            _apply_chain([s, y_inv_sum, s], sym[lam]).scale(field.t_pow(1 - n)) == dro_apply_poly(dual, sym[lam])
        ))

    def proportional(label: str, lhs_ops: Sequence[DRO], rhs_op: DRO) -> Tuple[bool, Optional[str]]:
        instances = [(lam, _apply_chain(lhs_ops, sym[lam]), dro_apply_poly(rhs_op, sym[lam])) for lam in window]
        constant = measure_constant(instances, field, label)
        builder.params[label] = field.render(constant)
        return True, None

    builder.run("C1", lambda: proportional("C1", [s, rep.Y(1), s], gklo_mode("f", 0, gctx)))
    builder.run("C2", lambda: proportional("C2", [s, eps_dunkl(params)], gklo_mode("e", 0, gctx)))
    if ell == 0:
        scale = field.inv(field.q_pow(-2) - field.one) * field.t_pow(2 * (n - 1))
        builder.run("e0_dualmac", lambda: dro_equal(gklo_mode("e", 0, gctx), dual.scale(scale), ctx))

    modes = [m for k in range(1, d + 1) for m in (k, -k)]
    for m in modes:
        def acts(m: int = m) -> bool:
            op, symbol = gklo_b(m, gctx), b_symbol(m, gctx)
            return all(dro_apply_poly(op, sym[lam]) == symbol * sym[lam] for lam in window)

        builder.run(f"b_multiplication[{m}]", acts)
        builder.run(f"b_symmetric[{m}]", lambda m=m: b_symbol(m, gctx).is_symmetric())
    for a in modes:
        for b in modes:
            if a < b:
                builder.run(f"b_commute[{a},{b}]", lambda a=a, b=b: commutator(gklo_b(a, gctx), gklo_b(b, gctx)).is_zero())

    def log_consistent() -> Tuple[bool, Optional[str]]:
        derived = log_series_b(gctx, LOG_SERIES_ORDER)
        for m, value in sorted(derived.items()):
            if value != b_symbol(m, gctx):
                return False, f"b[{m}]: series {value.render()} vs closed form {b_symbol(m, gctx).render()}"
        return True, None

    builder.run("b_log_series", log_consistent)
    return builder.build()
