"""Mode-form verification of the toroidal current relations.

A cubic p(z, w) = sum_k p_k z^{3-k} w^k times A(z)B(w) has z^-r w^-s
coefficient sum_k p_k A_{r+3-k} B_{s+k}; every relation below is that
extraction applied to one current identity.
"""

from itertools import permutations
from typing import Callable, Dict, List, Optional, Tuple

from ..logs import get_logger
from ..qdo import DRO, commutator, dro_compose, dro_equal
from ..report import Report, ReportBuilder
from ..scalars import ParamContext, Scalar
from .gklo import GKLOContext, GKLOImages, ModeWindow, cubic_coefficients, gklo_images, structure_constant

log = get_logger(__name__)

DEFAULT_SPAN_BOUND = 5


class ModeAlgebra:
    """Products of mode operators, memoised by index tuple."""

    def __init__(self, images: GKLOImages):
        self.images = images
        self.ctx = images.ctx
        self._products: Dict[Tuple, DRO] = {}

    def current(self, kind: str, r: int) -> DRO:
        if kind in ("e", "f"):
            return self.images.mode(kind, r)
        return self.images.psi_operator(kind[-1], r)

    def product(self, *factors: Tuple[str, int]) -> DRO:
        key = tuple(factors)
        if key not in self._products:
            if len(factors) == 1:
                self._products[key] = self.current(*factors[0])
            else:
                self._products[key] = dro_compose(self.current(*factors[0]), self.product(*factors[1:]))
        return self._products[key]

    def quadratic(self, coeffs: List[Scalar], left: str, right: str, r: int, s: int, swap: bool) -> DRO:
        """sum_k p_k A_{r+3-k} B_{s+k}; with swap the factors are B_{s+k} A_{r+3-k}."""
        out = DRO.zero(self.ctx.field, self.ctx.n)
        for k, c in enumerate(coeffs):
            a, b = (left, r + 3 - k), (right, s + k)
            pair = self.product(b, a) if swap else self.product(a, b)
            out = out + pair.scale(c)
        return out

    def nested(self, i: int, j: int, k: int, kind: str) -> DRO:
        """[x_i, [x_j, x_k]] for x = e or f."""
        return (
            self.product((kind, i), (kind, j), (kind, k))
            - self.product((kind, i), (kind, k), (kind, j))
            - self.product((kind, j), (kind, k), (kind, i))
            + self.product((kind, k), (kind, j), (kind, i))
        )


def serre_combination(algebra: ModeAlgebra, kind: str, modes: Tuple[int, int, int]) -> DRO:
    """z1^-r1 z2^-r2 z3^-r3 coefficient of Sym (z2/z3)[x(z1), [x(z2), x(z3)]]."""
    out = DRO.zero(algebra.ctx.field, algebra.ctx.n)
    for a, b, c in permutations(range(3)):
        out = out + algebra.nested(modes[a], modes[b] + 1, modes[c] - 1, kind)
    return out


def torgen_constants(ctx: GKLOContext) -> Dict[str, Scalar]:
    """Scalars in [psi+_1, x_r] and [psi-_{ell-1}, x_r] for x = e, f.

    Derived from the psi-e and psi-f mode relations with
    psi+_0 = 1 and psi-_ell = prod(-Z_a/q).
    """
    g, gt = cubic_coefficients(ctx)
    lead = ctx.psi_minus_leading()
    return {
        "e+": gt[1] - g[1],
        "e-": (g[2] - gt[2]) * lead,
        "f+": g[1] - gt[1],
        "f-": (gt[2] - g[2]) * lead,
    }


def toroidal_relation_checks(
    ctx: GKLOContext, window: ModeWindow, serre: bool = True
) -> List[Tuple[str, Callable[[], Tuple[DRO, DRO]]]]:
    """Named (lhs, rhs) pairs over the window."""
    algebra = ModeAlgebra(gklo_images(ctx))
    g, gt = cubic_coefficients(ctx)
    f = ctx.field
    kappa_inv = f.inv(structure_constant(ctx))
    checks: List[Tuple[str, Callable[[], Tuple[DRO, DRO]]]] = []

    for r, s in window.pairs():
        tag = f"[{r},{s}]"
        checks.append((f"ee{tag}", lambda r=r, s=s: (
            algebra.quadratic(g, "e", "e", r, s, swap=False),
            algebra.quadratic(gt, "e", "e", r, s, swap=True),
        )))
        checks.append((f"ff{tag}", lambda r=r, s=s: (
            algebra.quadratic(gt, "f", "f", r, s, swap=False),
            algebra.quadratic(g, "f", "f", r, s, swap=True),
        )))
        for sign in ("+", "-"):
            psi = f"psi{sign}"
            checks.append((f"{psi}e{tag}", lambda r=r, s=s, psi=psi: (
                algebra.quadratic(g, psi, "e", r, s, swap=False),
                algebra.quadratic(gt, psi, "e", r, s, swap=True),
            )))
            checks.append((f"{psi}f{tag}", lambda r=r, s=s, psi=psi: (
                algebra.quadratic(gt, psi, "f", r, s, swap=False),
                algebra.quadratic(g, psi, "f", r, s, swap=True),
            )))
        checks.append((f"ef{tag}", lambda r=r, s=s: (
            commutator(algebra.current("e", r), algebra.current("f", s)),
            (algebra.current("psi+", r + s) - algebra.current("psi-", r + s)).scale(kappa_inv),
        )))

    constants = torgen_constants(ctx)
    for r in window.modes():
        for kind in ("e", "f"):
            checks.append((f"torgen_{kind}+[{r}]", lambda r=r, kind=kind: (
                commutator(algebra.current("psi+", 1), algebra.current(kind, r)),
                algebra.current(kind, r + 1).scale(constants[kind + "+"]),
            )))
            checks.append((f"torgen_{kind}-[{r}]", lambda r=r, kind=kind: (
                commutator(algebra.current("psi-", ctx.ell - 1), algebra.current(kind, r)),
                algebra.current(kind, r - 1).scale(constants[kind + "-"]),
            )))

    if serre:
        zero = DRO.zero(f, ctx.n)
        for triple in window.sorted_triples():
            tag = "[" + ",".join(str(m) for m in triple) + "]"
            for kind in ("e", "f"):
                checks.append((f"serre_{kind}{tag}", lambda triple=triple, kind=kind: (
                    serre_combination(algebra, kind, triple), zero,
                )))
    return checks


def verify_toroidal_relations(
    ctx: GKLOContext,
    window: ModeWindow,
    check_ctx: Optional[ParamContext] = None,
    serre: bool = True,
    span_bound: int = DEFAULT_SPAN_BOUND,
) -> Report:
    window.check_span(span_bound)
    params = {
        "n": ctx.n,
        "ell": ctx.ell,
        "window": [window.rmin, window.rmax],
        "t_inverted": ctx.t_inverted,
    }
    if check_ctx is not None:
        params.update(mode=check_ctx.mode, seed=check_ctx.seed)
    builder = ReportBuilder("toroidal-relations", params)
    log.info("toroidal.start", n=ctx.n, ell=ctx.ell, rmin=window.rmin, rmax=window.rmax)
    for name, relation in toroidal_relation_checks(ctx, window, serre):
        def check(relation: Callable[[], Tuple[DRO, DRO]] = relation) -> Tuple[bool, Optional[str]]:
            lhs, rhs = relation()
            ok = dro_equal(lhs, rhs, check_ctx)
            return ok, None if ok else (lhs - rhs).render()[:400]

        builder.run(name, check)
    return builder.build()
