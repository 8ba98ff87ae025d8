"""
Laurent polynomials in x_1..x_n, weights and rational coefficients.

Variables are 0-based internally. A permutation w is a tuple with
w[k] = image of k, acting by (w p)(x) = p(x_{w(0)}, ..., x_{w(n-1)}), so
the monomial x^alpha goes to x^beta with beta[w[k]] = alpha[k]. Shifts are
base-q: (tau^mu p)(x) = p(q^{mu_0} x_0, ...).
"""

from collections import defaultdict
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from .errors import DivisionByZero, NonDominantWeight, UnequalDegree
from .scalars import Scalar, ScalarField

Exponent = Tuple[int, ...]
Weight = Tuple[int, ...]
Perm = Tuple[int, ...]
# (i, j, a, b) with i < j stands for the factor x_i - q^a t^b x_j
Binomial = Tuple[int, int, int, int]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose_perms(w: Perm, v: Perm) -> Perm:
    """(w o v)(k) = w(v(k))."""
    return tuple(w[v[k]] for k in range(len(v)))


def inverse_perm(w: Perm) -> Perm:
    out = [0] * len(w)
    for k, image in enumerate(w):
        out[image] = k
    return tuple(out)


def transposition(n: int, i: int) -> Perm:
    """Adjacent transposition swapping i and i+1 (0-based)."""
    w = list(range(n))
    w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


def perm_length(w: Perm) -> int:
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def permute_vector(w: Perm, v: Sequence[int]) -> Tuple[int, ...]:
    """(w . v)[w(k)] = v[k]."""
    out = [0] * len(v)
    for k, value in enumerate(v):
        out[w[k]] = value
    return tuple(out)


def is_dominant(weight: Sequence[int]) -> bool:
    return all(weight[k] >= weight[k + 1] for k in range(len(weight) - 1))


def check_dominant(weight: Sequence[int]) -> Weight:
    if not is_dominant(weight):
        raise NonDominantWeight("weight is not weakly decreasing", {"weight": tuple(weight)})
    return tuple(weight)


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Partial-sum dominance mu <= lam for weights of equal size."""
    if sum(mu) != sum(lam) or len(mu) != len(lam):
        raise UnequalDegree("dominance needs equal degree", {"mu": tuple(mu), "lambda": tuple(lam)})
    acc_mu = acc_lam = 0
    for a, b in zip(mu, lam):
        acc_mu += a
        acc_lam += b
        if acc_mu > acc_lam:
            return False
    return True


def dominant_weights(n: int, total: int, lower: int = 0) -> List[Weight]:
    """Dominant weights with entry sum `total` and all entries >= lower,
    in decreasing lexicographic order."""
    out: List[Weight] = []

    def rec(prefix: List[int], remaining: int, slots: int, cap: Optional[int]) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        top = remaining - lower * (slots - 1)
        if cap is not None:
            top = min(top, cap)
        for first in range(top, lower - 1, -1):
            if first * slots < remaining:
                break
            rec(prefix + [first], remaining - first, slots - 1, first)

    if n == 0:
        return [()] if total == 0 else []
    rec([], total, n, None)
    return out


def weight_orbit(weight: Sequence[int]) -> Iterator[Exponent]:
    for perm in multiset_permutations(list(weight)):
        yield tuple(perm)


class LaurentPoly:
    """Sparse Laurent polynomial; coefficients live in a ScalarField."""

    __slots__ = ("field", "n", "terms")

    def __init__(self, field: ScalarField, n: int, terms: Optional[Mapping[Exponent, Scalar]] = None):
        self.field = field
        self.n = n
        self.terms: Dict[Exponent, Scalar] = {
            k: v for k, v in (terms or {}).items() if not field.is_zero(v)
        }

    @classmethod
    def zero(cls, field: ScalarField, n: int) -> "LaurentPoly":
        return cls(field, n)

    @classmethod
    def constant(cls, field: ScalarField, n: int, c: Scalar) -> "LaurentPoly":
        return cls(field, n, {(0,) * n: c})

    @classmethod
    def one(cls, field: ScalarField, n: int) -> "LaurentPoly":
        return cls.constant(field, n, field.one)

    @classmethod
    def monomial(cls, field: ScalarField, n: int, alpha: Sequence[int], c: Optional[Scalar] = None) -> "LaurentPoly":
        return cls(field, n, {tuple(alpha): field.one if c is None else c})

    @classmethod
    def variable(cls, field: ScalarField, n: int, i: int, power: int = 1) -> "LaurentPoly":
        alpha = [0] * n
        alpha[i] = power
        return cls.monomial(field, n, alpha)

    @classmethod
    def binomial(cls, field: ScalarField, n: int, factor: Binomial) -> "LaurentPoly":
        i, j, a, b = factor
        ei = [0] * n
        ej = [0] * n
        ei[i] = 1
        ej[j] = 1
        return cls(field, n, {tuple(ei): field.one, tuple(ej): -field.qt(a, b)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, alpha: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(alpha), self.field.zero)

    def items(self) -> List[Tuple[Exponent, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def _new(self, terms: Mapping[Exponent, Scalar]) -> "LaurentPoly":
        return LaurentPoly(self.field, self.n, terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return self._new(out)

    def __neg__(self) -> "LaurentPoly":
        return self._new({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def scale(self, c: Scalar) -> "LaurentPoly":
        if self.field.is_zero(c):
            return self._new({})
        return self._new({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: object) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        out: Dict[Exponent, Scalar] = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                prod = va * vb
                out[k] = out[k] + prod if k in out else prod
        return self._new(out)

    def __pow__(self, k: int) -> "LaurentPoly":
        out = LaurentPoly.one(self.field, self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def permute(self, w: Perm) -> "LaurentPoly":
        return self._new({permute_vector(w, k): v for k, v in self.terms.items()})

    def shift(self, mu: Sequence[int]) -> "LaurentPoly":
        if not any(mu):
            return self
        out = {}
        for k, v in self.terms.items():
            out[k] = v * self.field.q_pow(sum(a * b for a, b in zip(mu, k)))
        return self._new(out)

    def multiply_monomial(self, alpha: Sequence[int]) -> "LaurentPoly":
        return self._new({tuple(x + y for x, y in zip(k, alpha)): v for k, v in self.terms.items()})

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        powers: Dict[Tuple[int, int], Scalar] = {}
        total = self.field.zero
        for k, v in self.terms.items():
            term = v
            for idx, e in enumerate(k):
                if e:
                    key = (idx, e)
                    if key not in powers:
                        powers[key] = self.field.power(point[idx], e)
                    term = term * powers[key]
            total = total + term
        return total

    def degree_range(self) -> Tuple[int, int]:
        degrees = [sum(k) for k in self.terms] or [0]
        return min(degrees), max(degrees)

    def is_symmetric(self) -> bool:
        for i in range(self.n - 1):
            if self.permute(transposition(self.n, i)) != self:
                return False
        return True

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for alpha, c in self.items():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(alpha) if e
            )
            coef = self.field.render(c)
            parts.append(f"({coef})*{mono}" if mono else f"({coef})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()})"


def act_symmetry(p: LaurentPoly, w: Perm) -> LaurentPoly:
    return p.permute(w)


def act_shift(p: LaurentPoly, mu: Sequence[int]) -> LaurentPoly:
    return p.shift(mu)


def monomial_symmetric(lam: Sequence[int], n: int, field: ScalarField) -> LaurentPoly:
    """m_lambda: each monomial of the orbit of x^lambda once."""
    lam = check_dominant(lam)
    if len(lam) != n:
        raise NonDominantWeight("weight length differs from rank", {"weight": lam, "n": n})
    return LaurentPoly(field, n, {alpha: field.one for alpha in weight_orbit(lam)})


def symmetric_expansion(p: LaurentPoly) -> Dict[Weight, Scalar]:
    """Coefficients of a symmetric p in the monomial-symmetric basis."""
    return {alpha: c for alpha, c in p.terms.items() if is_dominant(alpha)}


def from_symmetric_expansion(expansion: Mapping[Weight, Scalar], n: int, field: ScalarField) -> LaurentPoly:
    out = LaurentPoly.zero(field, n)
    for lam, c in expansion.items():
        out = out + monomial_symmetric(lam, n, field).scale(c)
    return out


def power_sum(field: ScalarField, n: int, k: int) -> LaurentPoly:
    out = LaurentPoly.zero(field, n)
    for i in range(n):
        out = out + LaurentPoly.variable(field, n, i, k)
    return out


def _canonical_factor(factor: Binomial, field: ScalarField) -> Tuple[Binomial, Optional[Scalar]]:
    """Orient a factor so i < j; returns the multiplier picked up by 1/factor."""
    i, j, a, b = factor
    if i < j:
        return factor, None
    if i == j:
        raise DivisionByZero("degenerate binomial factor", {"factor": factor})
    # 1/(x_i - c x_j) = (-1/c) / (x_j - x_i/c)
    return (j, i, -a, -b), -field.qt(-a, -b)


def _divide_binomial(p: LaurentPoly, factor: Binomial) -> Optional[LaurentPoly]:
    """Exact quotient of p by x_i - c x_j, or None when it does not divide."""
    i, j, a, b = factor
    field = p.field
    c = field.qt(a, b)
    if p.is_zero():
        return p
    slices: Dict[int, Dict[Exponent, Scalar]] = defaultdict(dict)
    for alpha, coef in p.terms.items():
        rest = alpha[:i] + (0,) + alpha[i + 1 :]
        slices[alpha[i]][rest] = coef
    kmin, kmax = min(slices), max(slices)
    if kmin == kmax:
        return None

    def times_r(block: Mapping[Exponent, Scalar], into: Dict[Exponent, Scalar]) -> None:
        for rest, coef in block.items():
            e = list(rest)
            e[j] += 1
            key = tuple(e)
            val = c * coef
            into[key] = into[key] + val if key in into else val

    quotient: Dict[Exponent, Scalar] = {}
    carry: Dict[Exponent, Scalar] = {}
    # B_{k-1} = A_k + r B_k, r = c x_j
    for k in range(kmax, kmin, -1):
        nxt = dict(slices.get(k, {}))
        times_r(carry, nxt)
        carry = {key: v for key, v in nxt.items() if not field.is_zero(v)}
        for rest, coef in carry.items():
            quotient[rest[:i] + (k - 1,) + rest[i + 1 :]] = coef
    remainder = dict(slices.get(kmin, {}))
    times_r(carry, remainder)
    if any(not field.is_zero(v) for v in remainder.values()):
        return None
    return LaurentPoly(field, p.n, quotient)


class RationalCoeff:
    """num / prod(factor^mult) with factors x_i - q^a t^b x_j, i < j."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: Optional[Mapping[Binomial, int]] = None):
        field = num.field
        clean: Dict[Binomial, int] = {}
        for factor, mult in (den or {}).items():
            if mult <= 0:
                continue
            oriented, multiplier = _canonical_factor(factor, field)
            if multiplier is not None:
                num = num.scale(field.power(multiplier, mult))
            clean[oriented] = clean.get(oriented, 0) + mult
        self.num = num
        self.den: Dict[Binomial, int] = clean if not num.is_zero() else {}

    @property
    def field(self) -> ScalarField:
        return self.num.field

    @property
    def n(self) -> int:
        return self.num.n

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalCoeff":
        return cls(p)

    @classmethod
    def constant(cls, field: ScalarField, n: int, c: Scalar) -> "RationalCoeff":
        return cls(LaurentPoly.constant(field, n, c))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def den_poly(self, factors: Optional[Mapping[Binomial, int]] = None) -> LaurentPoly:
        out = LaurentPoly.one(self.field, self.n)
        for factor, mult in (self.den if factors is None else factors).items():
            out = out * LaurentPoly.binomial(self.field, self.n, factor) ** mult
        return out

    def _over(self, den: Mapping[Binomial, int]) -> LaurentPoly:
        """Numerator rewritten over a common multiple `den` of self.den."""
        extra = {f: m - self.den.get(f, 0) for f, m in den.items()}
        return self.num * self.den_poly(extra)

    def __add__(self, other: "RationalCoeff") -> "RationalCoeff":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RationalCoeff(self.num + other.num, self.den)
        lcm = dict(self.den)
        for f, m in other.den.items():
            lcm[f] = max(m, lcm.get(f, 0))
        return RationalCoeff(self._over(lcm) + other._over(lcm), lcm)

    def __neg__(self) -> "RationalCoeff":
        return RationalCoeff(-self.num, self.den)

    def __sub__(self, other: "RationalCoeff") -> "RationalCoeff":
        return self + (-other)

    def scale(self, c: Scalar) -> "RationalCoeff":
        return RationalCoeff(self.num.scale(c), self.den)

    def __mul__(self, other: object) -> "RationalCoeff":
        if isinstance(other, LaurentPoly):
            return RationalCoeff(self.num * other, self.den)
        if not isinstance(other, RationalCoeff):
            return self.scale(other)
        den = dict(self.den)
        for f, m in other.den.items():
            den[f] = den.get(f, 0) + m
        return RationalCoeff(self.num * other.num, den)

    def permute(self, w: Perm) -> "RationalCoeff":
        den = {}
        for (i, j, a, b), m in self.den.items():
            key = (w[i], w[j], a, b)
            den[key] = den.get(key, 0) + m
        return RationalCoeff(self.num.permute(w), den)

    def shift(self, mu: Sequence[int]) -> "RationalCoeff":
        if not any(mu):
            return self
        num = self.num.shift(mu)
        den: Dict[Binomial, int] = {}
        for (i, j, a, b), m in self.den.items():
            num = num.scale(self.field.q_pow(-mu[i] * m))
            key = (i, j, a + mu[j] - mu[i], b)
            den[key] = den.get(key, 0) + m
        return RationalCoeff(num, den)

    def reduced(self) -> "RationalCoeff":
        """Cancel every denominator factor that divides the numerator."""
        if not self.den:
            return self
        num = self.num
        den = dict(self.den)
        for factor in sorted(den):
            while den[factor] > 0:
                quotient = _divide_binomial(num, factor)
                if quotient is None:
                    break
                num = quotient
                den[factor] -= 1
        return RationalCoeff(num, den)

    def to_laurent(self) -> Optional[LaurentPoly]:
        reduced = self.reduced()
        if reduced.den:
            return None
        return reduced.num

    def is_polynomial(self) -> bool:
        return self.to_laurent() is not None

    def equals(self, other: "RationalCoeff") -> bool:
        """Cross-multiplied equality."""
        return (self - other).is_zero()

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        den_value = self.field.one
        for (i, j, a, b), m in self.den.items():
            value = point[i] - self.field.qt(a, b) * point[j]
            if self.field.is_zero(value):
                raise DivisionByZero("denominator vanishes at evaluation point")
            den_value = den_value * self.field.power(value, m)
        return self.field.div(self.num.evaluate(point), den_value)

    def render(self) -> str:
        if not self.den:
            return self.num.render()
        factors = " * ".join(
            f"(x{i + 1} - q^{a} t^{b} x{j + 1})" + (f"^{m}" if m > 1 else "")
            for (i, j, a, b), m in sorted(self.den.items())
        )
        return f"[{self.num.render()}] / [{factors}]"

    def __repr__(self) -> str:
        return f"RationalCoeff({self.render()})"


def laurent_sum(polys: Iterable[LaurentPoly], field: ScalarField, n: int) -> LaurentPoly:
    out = LaurentPoly.zero(field, n)
    for p in polys:
        out = out + p
    return out
