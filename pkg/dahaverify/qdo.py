"""
Difference-reflection operators.

A DRO is a finite sum of terms f(x) * tau^mu * w, acting on a Laurent
polynomial p by p -> f * tau^mu(w p): the permutation is applied first,
then the base-q shift, then the coefficient multiplies. Terms are keyed
by (w, mu).
"""

from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import DivisionByZero, InvalidArgument, OddShiftExponent
from .laurent import (
    LaurentPoly,
    Perm,
    RationalCoeff,
    compose_perms,
    identity_perm,
    permute_vector,
)
from .logs import get_logger
from .scalars import ParamContext, Scalar, ScalarField

log = get_logger(__name__)

TermKey = Tuple[Perm, Tuple[int, ...]]

EQUALITY_TRIALS = 3


class DRO:
    """Immutable sum of coefficient * shift * permutation terms."""

    __slots__ = ("field", "n", "terms")

    def __init__(self, field: ScalarField, n: int, terms: Optional[Mapping[TermKey, RationalCoeff]] = None):
        self.field = field
        self.n = n
        self.terms: Dict[TermKey, RationalCoeff] = {
            k: v for k, v in (terms or {}).items() if not v.is_zero()
        }

    @classmethod
    def zero(cls, field: ScalarField, n: int) -> "DRO":
        return cls(field, n)

    @classmethod
    def identity(cls, field: ScalarField, n: int) -> "DRO":
        return cls.term(field, n, RationalCoeff.constant(field, n, field.one))

    @classmethod
    def term(
        cls,
        field: ScalarField,
        n: int,
        coef: RationalCoeff,
        shift: Optional[Sequence[int]] = None,
        perm: Optional[Perm] = None,
    ) -> "DRO":
        key = (perm or identity_perm(n), tuple(shift or (0,) * n))
        return cls(field, n, {key: coef})

    @classmethod
    def multiplication(cls, p: LaurentPoly) -> "DRO":
        return cls.term(p.field, p.n, RationalCoeff.from_poly(p))

    @classmethod
    def scalar(cls, field: ScalarField, n: int, c: Scalar) -> "DRO":
        return cls.term(field, n, RationalCoeff.constant(field, n, c))

    @classmethod
    def shift_operator(cls, field: ScalarField, n: int, mu: Sequence[int]) -> "DRO":
        return cls.term(field, n, RationalCoeff.constant(field, n, field.one), shift=mu)

    @classmethod
    def permutation(cls, field: ScalarField, n: int, w: Perm) -> "DRO":
        return cls.term(field, n, RationalCoeff.constant(field, n, field.one), perm=w)

    def is_zero(self) -> bool:
        return not self.terms

    def keys(self) -> Iterable[TermKey]:
        return sorted(self.terms)

    def __add__(self, other: "DRO") -> "DRO":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = (out[k] + v).reduced() if k in out else v
        return DRO(self.field, self.n, out)

    def __neg__(self) -> "DRO":
        return DRO(self.field, self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "DRO") -> "DRO":
        return self + (-other)

    def scale(self, c: Scalar) -> "DRO":
        return DRO(self.field, self.n, {k: v.scale(c) for k, v in self.terms.items()})

    def __mul__(self, other: object) -> "DRO":
        if isinstance(other, DRO):
            return dro_compose(self, other)
        return self.scale(other)

    def __rmul__(self, other: object) -> "DRO":
        return self.scale(other)

    def __pow__(self, k: int) -> "DRO":
        out = DRO.identity(self.field, self.n)
        for _ in range(k):
            out = dro_compose(out, self)
        return out

    def left_multiply(self, p: LaurentPoly) -> "DRO":
        return DRO(self.field, self.n, {k: (v * p).reduced() for k, v in self.terms.items()})

    def max_shift(self) -> int:
        return max((max(abs(s) for s in mu) for _, mu in self.terms), default=0)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (perm, mu), coef in sorted(self.terms.items()):
            label = []
            if any(mu):
                label.append(f"tau{list(mu)}")
            if perm != identity_perm(self.n):
                label.append(f"w{[k + 1 for k in perm]}")
            parts.append(f"{{{coef.render()}}}" + ("*" + "*".join(label) if label else ""))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"DRO(n={self.n}, terms={len(self.terms)})"


def dro_apply(op: DRO, p: LaurentPoly) -> RationalCoeff:
    """Apply op to p; the result is reduced and may be rational."""
    out = RationalCoeff(LaurentPoly.zero(op.field, op.n))
    for (perm, mu), coef in op.terms.items():
        out = out + coef * p.permute(perm).shift(mu)
    return out.reduced()


def dro_apply_poly(op: DRO, p: LaurentPoly) -> LaurentPoly:
    """Apply op to p and insist on a Laurent polynomial result."""
    result = dro_apply(op, p).to_laurent()
    if result is None:
        raise DivisionByZero("operator image is not a Laurent polynomial")
    return result


def dro_compose(a: DRO, b: DRO) -> DRO:
    """(f, mu, w) o (g, nu, v) = (f * tau^mu(w g), mu + w.nu, w o v)."""
    out: Dict[TermKey, RationalCoeff] = {}
    for (w, mu), f in a.terms.items():
        for (v, nu), g in b.terms.items():
            coef = f * g.permute(w).shift(mu)
            wnu = permute_vector(w, nu)
            key = (compose_perms(w, v), tuple(x + y for x, y in zip(mu, wnu)))
            out[key] = out[key] + coef if key in out else coef
    return DRO(a.field, a.n, {k: v.reduced() for k, v in out.items()})


def compose_all(ops: Iterable[DRO]) -> DRO:
    """Left-to-right product ops[0] * ops[1] * ..."""
    result: Optional[DRO] = None
    for op in ops:
        result = op if result is None else dro_compose(result, op)
    if result is None:
        raise InvalidArgument("compose_all needs at least one operator")
    return result


def commutator(a: DRO, b: DRO) -> DRO:
    return dro_compose(a, b) - dro_compose(b, a)


def _random_point(field: ScalarField, n: int, rng: np.random.Generator) -> Tuple[Scalar, ...]:
    return tuple(field.random_element(rng) for _ in range(n))


def dro_equal(a: DRO, b: DRO, ctx: Optional[ParamContext] = None) -> bool:
    """Per-key coefficient equality.

    Exact backends cross-multiply. Random backends compare the two
    coefficients at random x-points, EQUALITY_TRIALS times per key.
    """
    keys = set(a.terms) | set(b.terms)
    zero = RationalCoeff(LaurentPoly.zero(a.field, a.n))
    if a.field.is_exact or ctx is None:
        return all(a.terms.get(k, zero).equals(b.terms.get(k, zero)) for k in keys)
    rng = np.random.default_rng(ctx.seed + 7919)
    for key in sorted(keys):
        fa = a.terms.get(key, zero)
        fb = b.terms.get(key, zero)
        trials = 0
        attempts = 0
        while trials < EQUALITY_TRIALS:
            attempts += 1
            if attempts > 50 * EQUALITY_TRIALS:
                if not fa.equals(fb):
                    return False
                break
            point = _random_point(a.field, a.n, rng)
            try:
                va, vb = fa.evaluate(point), fb.evaluate(point)
            except DivisionByZero:
                continue
            if va != vb:
                log.debug("dro.unequal", key=str(key))
                return False
            trials += 1
    return True


def gaussian_multiplier(field: ScalarField, n: int, mu: Sequence[int], direction: str) -> LaurentPoly:
    """q^{sum mu^2/4} x^{mu/2} (inward) or its inverse (outward)."""
    if any(m % 2 for m in mu):
        raise OddShiftExponent("gaussian conjugation needs even shifts", {"shift": tuple(mu)})
    half = tuple(m // 2 for m in mu)
    qexp = sum(h * h for h in half)
    if direction == "inward":
        return LaurentPoly.monomial(field, n, half, field.q_pow(qexp))
    if direction == "outward":
        return LaurentPoly.monomial(field, n, tuple(-h for h in half), field.q_pow(-qexp))
    raise InvalidArgument(f"unknown direction {direction!r}")


def gaussian_conjugate(op: DRO, direction: str = "inward") -> DRO:
    """ad of the Gaussian: inward is gamma^-1 * op * gamma."""
    out = {}
    for (perm, mu), coef in op.terms.items():
        out[(perm, mu)] = coef * gaussian_multiplier(op.field, op.n, mu, direction)
    return DRO(op.field, op.n, out)


def row_coefficient(
    field: ScalarField, n: int, i: int, lead: Scalar, trail: Scalar
) -> RationalCoeff:
    """prod_{j != i} (lead x_i + trail x_j) / (x_i - x_j), 0-based i."""
    num = LaurentPoly.one(field, n)
    den = {}
    for j in range(n):
        if j == i:
            continue
        num = num * LaurentPoly(
            field,
            n,
            {
                tuple(1 if k == i else 0 for k in range(n)): lead,
                tuple(1 if k == j else 0 for k in range(n)): trail,
            },
        )
        den[(i, j, 0, 0)] = 1
    return RationalCoeff(num, den)


def single_shift(n: int, i: int, exponent: int) -> Tuple[int, ...]:
    return tuple(exponent if k == i else 0 for k in range(n))
