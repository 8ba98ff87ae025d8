"""
Polynomial representation of the GL_n DAHA and cyclotomic q-Dunkl operators.

Indices in the public API are 1-based, matching the algebra's notation.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import BadIndex, ConfigError
from .laurent import (
    LaurentPoly,
    Perm,
    RationalCoeff,
    compose_perms,
    dominant_weights,
    identity_perm,
    monomial_symmetric,
    perm_length,
    transposition,
)
from .logs import get_logger
from .qdo import DRO, commutator, compose_all, dro_apply, dro_compose, dro_equal, gaussian_conjugate
from .report import Report, ReportBuilder
from .scalars import ParamContext, Scalar, ScalarField

log = get_logger(__name__)

GENERATOR_KINDS = ("T", "Tinv", "X", "Xinv", "pi", "piinv", "Y", "Yinv")


@dataclass(frozen=True)
class DahaGenSymbol:
    kind: str
    index: int = 0

    def validate(self, n: int) -> None:
        if self.kind not in GENERATOR_KINDS:
            raise BadIndex(f"unknown generator kind {self.kind!r}")
        if self.kind in ("T", "Tinv"):
            if not 1 <= self.index <= n - 1:
                raise BadIndex("T index out of range", {"index": self.index, "n": n})
        elif self.kind in ("X", "Xinv", "Y", "Yinv"):
            if not 1 <= self.index <= n:
                raise BadIndex("index out of range", {"index": self.index, "n": n})

    @classmethod
    def parse(cls, text: str) -> "DahaGenSymbol":
        """'T1', 'Yinv2', 'pi', ..."""
        for kind in sorted(GENERATOR_KINDS, key=len, reverse=True):
            if text.startswith(kind):
                rest = text[len(kind) :]
                return cls(kind, int(rest) if rest else 0)
        raise BadIndex(f"cannot parse generator {text!r}")


@dataclass(frozen=True)
class CyclotomicParams:
    """Rank, number of Z-factors and their values."""

    n: int
    ell: int
    Z: Tuple[Scalar, ...]
    field: ScalarField

    def __post_init__(self) -> None:
        if self.ell < 0 or len(self.Z) != self.ell:
            raise ConfigError("Z must have ell entries", {"ell": self.ell, "Z": len(self.Z)})
        if any(self.field.is_zero(z) for z in self.Z):
            raise ConfigError("Z entries must be nonzero")

    @classmethod
    def generic(cls, field: ScalarField, n: int, ell: Optional[int] = None) -> "CyclotomicParams":
        ell = field.ell if ell is None else ell
        return cls(n, ell, tuple(field.z(a) for a in range(1, ell + 1)), field)

    @classmethod
    def from_literals(cls, field: ScalarField, n: int, values: Sequence[Fraction]) -> "CyclotomicParams":
        return cls(n, len(values), tuple(field.from_fraction(Fraction(v)) for v in values), field)

    def z_product(self) -> Scalar:
        out = self.field.one
        for z in self.Z:
            out = out * z
        return out


class DahaRepresentation:
    """Cached generator images for one (field, n)."""

    def __init__(self, field: ScalarField, n: int):
        if n < 1:
            raise BadIndex("rank must be positive", {"n": n})
        self.field = field
        self.n = n
        self._cache: Dict[Tuple[str, int], DRO] = {}
        self._hecke: Optional[Dict[Perm, DRO]] = None

    def _cached(self, key: Tuple[str, int], build: Callable[[], DRO]) -> DRO:
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def _coef(self, num: LaurentPoly, den: Optional[Dict] = None) -> RationalCoeff:
        return RationalCoeff(num, den)

    def _var(self, i: int, power: int = 1) -> LaurentPoly:
        return LaurentPoly.variable(self.field, self.n, i, power)

    def identity(self) -> DRO:
        return DRO.identity(self.field, self.n)

    def T(self, i: int) -> DRO:
        DahaGenSymbol("T", i).validate(self.n)

        def build() -> DRO:
            # [(t x_a - t^-1 x_b) s_i - (t - t^-1) x_b] / (x_a - x_b)
            a, b = i - 1, i
            f, t = self.field, self.field.t
            den = {(a, b, 0, 0): 1}
            swap = self._var(a).scale(t) - self._var(b).scale(f.inv(t))
            stay = -self._var(b).scale(t - f.inv(t))
            return DRO(
                f,
                self.n,
                {
                    (transposition(self.n, a), (0,) * self.n): self._coef(swap, den),
                    (identity_perm(self.n), (0,) * self.n): self._coef(stay, den),
                },
            )

        return self._cached(("T", i), build)

    def T_inv(self, i: int) -> DRO:
        t = self.field.t
        return self._cached(
            ("Tinv", i),
            lambda: self.T(i) - DRO.scalar(self.field, self.n, t - self.field.inv(t)),
        )

    def X(self, i: int, power: int = 1) -> DRO:
        DahaGenSymbol("X", i).validate(self.n)
        return DRO.multiplication(self._var(i - 1, power))

    def X_inv(self, i: int) -> DRO:
        return self.X(i, -1)

    def pi(self) -> DRO:
        n = self.n
        w = tuple((k + 1) % n for k in range(n))
        mu = (-2,) + (0,) * (n - 1)
        return self._cached(("pi", 0), lambda: DRO.term(self.field, n, RationalCoeff.constant(self.field, n, self.field.one), mu, w))

    def pi_inv(self) -> DRO:
        n = self.n
        w = tuple((k - 1) % n for k in range(n))
        mu = (0,) * (n - 1) + (2,)
        return self._cached(("piinv", 0), lambda: DRO.term(self.field, n, RationalCoeff.constant(self.field, n, self.field.one), mu, w))

    def Y(self, i: int) -> DRO:
        """T_i ... T_{n-1} pi^-1 T_1^-1 ... T_{i-1}^-1."""
        DahaGenSymbol("Y", i).validate(self.n)

        def build() -> DRO:
            chain = [self.T(k) for k in range(i, self.n)]
            chain.append(self.pi_inv())
            chain += [self.T_inv(k) for k in range(1, i)]
            return compose_all(chain)

        return self._cached(("Y", i), build)

    def Y_inv(self, i: int) -> DRO:
        """T_{i-1} ... T_1 pi T_{n-1}^-1 ... T_i^-1."""
        DahaGenSymbol("Yinv", i).validate(self.n)

        def build() -> DRO:
            chain = [self.T(k) for k in range(i - 1, 0, -1)]
            chain.append(self.pi())
            chain += [self.T_inv(k) for k in range(self.n - 1, i - 1, -1)]
            return compose_all(chain)

        return self._cached(("Yinv", i), build)

    def generator(self, sym: DahaGenSymbol) -> DRO:
        sym.validate(self.n)
        builders: Dict[str, Callable[[], DRO]] = {
            "T": lambda: self.T(sym.index),
            "Tinv": lambda: self.T_inv(sym.index),
            "X": lambda: self.X(sym.index),
            "Xinv": lambda: self.X_inv(sym.index),
            "pi": self.pi,
            "piinv": self.pi_inv,
            "Y": lambda: self.Y(sym.index),
            "Yinv": lambda: self.Y_inv(sym.index),
        }
        return builders[sym.kind]()

    def hecke_basis(self) -> Dict[Perm, DRO]:
        """T_w for every permutation, built along reduced words."""
        if self._hecke is None:
            n = self.n
            basis = {identity_perm(n): self.identity()}
            frontier = [identity_perm(n)]
            while frontier:
                nxt = []
                for w in frontier:
                    for i in range(n - 1):
                        sw = compose_perms(transposition(n, i), w)
                        if sw not in basis and perm_length(sw) == perm_length(w) + 1:
                            basis[sw] = dro_compose(self.T(i + 1), basis[w])
                            nxt.append(sw)
                frontier = nxt
            self._hecke = basis
        return self._hecke

    def symmetrizer(self) -> DRO:
        def build() -> DRO:
            f = self.field
            total = DRO.zero(f, self.n)
            norm = f.zero
            for w, tw in self.hecke_basis().items():
                length = perm_length(w)
                total = total + tw.scale(f.t_pow(length))
                norm = norm + f.t_pow(2 * length)
            return total.scale(f.inv(norm))

        return self._cached(("S", 0), build)


@lru_cache(maxsize=64)
def representation(field: ScalarField, n: int) -> DahaRepresentation:
    return DahaRepresentation(field, n)


def rep_generator(sym: DahaGenSymbol, n: int, field: ScalarField) -> DRO:
    return representation(field, n).generator(sym)


def symmetrizer(n: int, field: ScalarField) -> DRO:
    return representation(field, n).symmetrizer()


def dunkl_anchor(params: CyclotomicParams) -> DRO:
    """X_n^-1 prod_a (q^-1 t^{1-n} Y_n^-1 - Z_a).

    Conjugation by X_n sends a symmetric f(Y) to f(Y_1, ..., q^-2 Y_n),
    so gamma_Z X_n^-1 gamma_Z^-1 = (-1)^l (prod Z)^-1 times this element.
    """
    rep = representation(params.field, params.n)
    n, f = params.n, params.field
    base = rep.Y_inv(n).scale(f.q_pow(-1) * f.t_pow(1 - n))
    out = rep.X_inv(n)
    for z in params.Z:
        out = dro_compose(out, base - DRO.scalar(f, n, z))
    return out


def dunkl(i: int, params: CyclotomicParams) -> DRO:
    """D_i = T_i ... T_{n-1} D_n T_{n-1} ... T_i; for ell = 0 this is X_i^-1."""
    rep = representation(params.field, params.n)
    n = params.n
    if not 1 <= i <= n:
        raise BadIndex("Dunkl index out of range", {"i": i, "n": n})
    chain_left = [rep.T(k) for k in range(i, n)]
    chain_right = [rep.T(k) for k in range(n - 1, i - 1, -1)]
    return compose_all(chain_left + [dunkl_anchor(params)] + chain_right)


def eps_dunkl(params: CyclotomicParams) -> DRO:
    """Image of epsilon(D_1) via iterated Gaussian conjugation."""
    rep = representation(params.field, params.n)
    f, n = params.field, params.n
    b = rep.Y_inv(1).scale(f.t_pow(1 - n))
    for z in params.Z:
        b = gaussian_conjugate(b, "inward") - b.scale(z)
    return b


def power_sum_element(a: int, k: int, b: int, params: CyclotomicParams) -> DRO:
    """S (sum_i X_i^a Y_i^-k D_i^b) S."""
    rep = representation(params.field, params.n)
    inner = DRO.zero(params.field, params.n)
    for i in range(1, params.n + 1):
        factors = [rep.X(i, a)] + [rep.Y_inv(i)] * k + [dunkl(i, params)] * b
        inner = inner + compose_all(factors)
    s = rep.symmetrizer()
    return compose_all([s, inner, s])


def _product(ops: Sequence[DRO]) -> DRO:
    return compose_all(ops)


def daha_relations(rep: DahaRepresentation) -> List[Tuple[str, Callable[[], Tuple[DRO, DRO]]]]:
    """Named (lhs, rhs) pairs of the T/X/Y and pi presentations."""
    n, f = rep.n, rep.field
    t = f.t
    one = rep.identity
    rels: List[Tuple[str, Callable[[], Tuple[DRO, DRO]]]] = []

    def add(name: str, fn: Callable[[], Tuple[DRO, DRO]]) -> None:
        rels.append((name, fn))

    for i in range(1, n):
        add(f"hecke_quadratic[{i}]", lambda i=i: (
            dro_compose(rep.T(i), rep.T(i)),
            rep.T(i).scale(t - f.inv(t)) + one(),
        ))
        add(f"hecke_inverse[{i}]", lambda i=i: (dro_compose(rep.T(i), rep.T_inv(i)), one()))
        add(f"txt[{i}]", lambda i=i: (_product([rep.T(i), rep.X(i), rep.T(i)]), rep.X(i + 1)))
        add(f"tyt[{i}]", lambda i=i: (_product([rep.T_inv(i), rep.Y(i), rep.T_inv(i)]), rep.Y(i + 1)))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                add(f"tx_commute[{i},{j}]", lambda i=i, j=j: (
                    dro_compose(rep.T(i), rep.X(j)), dro_compose(rep.X(j), rep.T(i))))
                add(f"ty_commute[{i},{j}]", lambda i=i, j=j: (
                    dro_compose(rep.T(i), rep.Y(j)), dro_compose(rep.Y(j), rep.T(i))))
    for i in range(1, n - 1):
        add(f"braid[{i}]", lambda i=i: (
            _product([rep.T(i), rep.T(i + 1), rep.T(i)]),
            _product([rep.T(i + 1), rep.T(i), rep.T(i + 1)]),
        ))
    for i in range(1, n):
        for j in range(i + 2, n):
            add(f"t_commute[{i},{j}]", lambda i=i, j=j: (
                dro_compose(rep.T(i), rep.T(j)), dro_compose(rep.T(j), rep.T(i))))
    for i in range(1, n + 1):
        add(f"y_inverse[{i}]", lambda i=i: (dro_compose(rep.Y(i), rep.Y_inv(i)), one()))
        for j in range(i + 1, n + 1):
            add(f"x_commute[{i},{j}]", lambda i=i, j=j: (
                dro_compose(rep.X(i), rep.X(j)), dro_compose(rep.X(j), rep.X(i))))
            add(f"y_commute[{i},{j}]", lambda i=i, j=j: (
                dro_compose(rep.Y(i), rep.Y(j)), dro_compose(rep.Y(j), rep.Y(i))))

    def yprod() -> DRO:
        return _product([rep.Y(k) for k in range(1, n + 1)])

    def xprod() -> DRO:
        return _product([rep.X(k) for k in range(1, n + 1)])

    for j in range(1, n + 1):
        add(f"yprod_x[{j}]", lambda j=j: (
            dro_compose(yprod(), rep.X(j)), dro_compose(rep.X(j), yprod()).scale(f.q_pow(2))))
        add(f"xprod_y[{j}]", lambda j=j: (
            dro_compose(xprod(), rep.Y(j)), dro_compose(rep.Y(j), xprod()).scale(f.q_pow(-2))))
    if n >= 2:
        add("x1_y2", lambda: (
            dro_compose(rep.X(1), rep.Y(2)),
            _product([rep.Y(2), rep.T(1), rep.T(1), rep.X(1)]),
        ))
    # pi presentation
    add("pi_inverse", lambda: (dro_compose(rep.pi(), rep.pi_inv()), one()))
    for i in range(1, n - 1):
        add(f"pi_t[{i}]", lambda i=i: (
            dro_compose(rep.pi(), rep.T(i)), dro_compose(rep.T(i + 1), rep.pi())))
    for i in range(1, n):
        add(f"pin_t[{i}]", lambda i=i: (
            dro_compose(rep.pi() ** n, rep.T(i)), dro_compose(rep.T(i), rep.pi() ** n)))
        add(f"pi_x[{i}]", lambda i=i: (
            dro_compose(rep.pi(), rep.X(i)), dro_compose(rep.X(i + 1), rep.pi())))
    add("pi_xn", lambda: (
        dro_compose(rep.pi(), rep.X(n)), dro_compose(rep.X(1), rep.pi()).scale(f.q_pow(-2))))
    return rels


def verify_daha_presentation(n: int, ctx: ParamContext) -> Report:
    field = ctx.make_field()
    rep = representation(field, n)
    builder = ReportBuilder("daha-presentation", {"n": n, "mode": ctx.mode, "seed": ctx.seed})
    for name, relation in daha_relations(rep):
        def check(relation: Callable[[], Tuple[DRO, DRO]] = relation) -> Tuple[bool, Optional[str]]:
            lhs, rhs = relation()
            ok = dro_equal(lhs, rhs, ctx)
            return ok, None if ok else (lhs - rhs).render()[:400]

        builder.run(name, check)
    return builder.build()


def verify_symmetrizer(n: int, ctx: ParamContext) -> Report:
    """Idempotency, T_i S = t S and symmetric images."""
    field = ctx.make_field()
    rep = representation(field, n)
    s = rep.symmetrizer()
    builder = ReportBuilder("symmetrizer", {"n": n, "mode": ctx.mode, "seed": ctx.seed})
    builder.run("idempotent", lambda: dro_equal(dro_compose(s, s), s, ctx))
    for i in range(1, n):
        builder.run(f"absorbs_t[{i}]", lambda i=i: dro_equal(dro_compose(rep.T(i), s), s.scale(field.t), ctx))
        builder.run(f"sts[{i}]", lambda i=i: dro_equal(_product([s, rep.T(i), s]), s.scale(field.t), ctx))

    def symmetric_images() -> bool:
        for alpha in [(1,) + (0,) * (n - 1), (2,) + (1,) * min(1, n - 1) + (0,) * max(0, n - 2)]:
            image = dro_apply(s, LaurentPoly.monomial(field, n, alpha)).to_laurent()
            if image is None or not image.is_symmetric():
                return False
        return True

    builder.run("symmetric_image", symmetric_images)
    return builder.build()


def verify_dunkl_commutativity(n: int, ell: int, ctx: ParamContext) -> Report:
    field = ctx.make_field()
    params = CyclotomicParams.generic(field, n, ell)
    builder = ReportBuilder(
        "dunkl-commutativity", {"n": n, "ell": ell, "mode": ctx.mode, "seed": ctx.seed}
    )
    ops = {i: dunkl(i, params) for i in range(1, n + 1)}
    zero = DRO.zero(field, n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            builder.run(f"commute[{i},{j}]", lambda i=i, j=j: dro_equal(commutator(ops[i], ops[j]), zero, ctx))
    if ell == 0:
        builder.run("eps_dunkl_ell0", lambda: dro_equal(
            eps_dunkl(params), representation(field, n).Y_inv(1).scale(field.t_pow(1 - n)), ctx))
    return builder.build()


def verify_power_sums(n: int, ell: int, ctx: ParamContext, degree: int = 2) -> Report:
    """P_{a,k,b} map symmetric polynomials to symmetric Laurent polynomials."""
    field = ctx.make_field()
    params = CyclotomicParams.generic(field, n, ell)
    builder = ReportBuilder("power-sums", {"n": n, "ell": ell, "mode": ctx.mode, "seed": ctx.seed})
    triples = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1)]
    for a, k, b in triples:
        def check(a: int = a, k: int = k, b: int = b) -> bool:
            op = power_sum_element(a, k, b, params)
            for total in range(degree + 1):
                for lam in dominant_weights(n, total):
                    image = dro_apply(op, monomial_symmetric(lam, n, field)).to_laurent()
                    if image is None or not image.is_symmetric():
                        return False
            return True

        builder.run(f"symmetric[{a},{k},{b}]", check)
    return builder.build()
