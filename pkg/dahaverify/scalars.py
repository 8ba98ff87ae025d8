"""
Coefficient-field arithmetic for Q(q, t, Z1..Zl).

Three backends share the ScalarField interface:

- ExactField: sympy rational-function field, gcd-normalized, certifying.
- ModPField: specialization of every parameter at a residue mod p, in
  sympy's GF(p) domain.
- RationalField: specialization at random rationals (fractions.Fraction).

Random backends are Schwartz-Zippel style identity testers: an identity
that holds at a random point holds generically with probability at least
1 - deg/p per trial.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional

import numpy as np
from sympy import QQ
from sympy.polys.domains import GF
from sympy.polys.fields import field as sympy_field

from .errors import ConfigError, DivisionByZero, ExhaustedDraws, InvalidArgument
from .logs import get_logger

log = get_logger(__name__)

MERSENNE_61 = (1 << 61) - 1
MODES = ("exact", "rational-random", "modp-random")
DRAW_BUDGET = 1000

Scalar = Any


def param_names(ell: int) -> List[str]:
    return ["q", "t"] + [f"Z{a}" for a in range(1, ell + 1)]


class ScalarField(ABC):
    """Common interface of the three backends."""

    mode: str = ""

    def __init__(self, ell: int):
        self.ell = ell
        self._qpow: Dict[int, Scalar] = {}
        self._tpow: Dict[int, Scalar] = {}

    @property
    def is_exact(self) -> bool:
        return self.mode == "exact"

    @abstractmethod
    def from_int(self, n: int) -> Scalar: ...

    @abstractmethod
    def param(self, name: str) -> Scalar: ...

    @abstractmethod
    def random_element(self, rng: np.random.Generator) -> Scalar: ...

    def from_fraction(self, value: Fraction) -> Scalar:
        return self.div(self.from_int(value.numerator), self.from_int(value.denominator))

    @property
    def zero(self) -> Scalar:
        return self.from_int(0)

    @property
    def one(self) -> Scalar:
        return self.from_int(1)

    @property
    def q(self) -> Scalar:
        return self.param("q")

    @property
    def t(self) -> Scalar:
        return self.param("t")

    def z(self, a: int) -> Scalar:
        """Z_a, 1-based."""
        return self.param(f"Z{a}")

    def z_values(self) -> List[Scalar]:
        return [self.z(a) for a in range(1, self.ell + 1)]

    def is_zero(self, x: Scalar) -> bool:
        return not x

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        if self.is_zero(b):
            raise DivisionByZero("division by zero scalar", {"mode": self.mode})
        try:
            return a / b
        except ZeroDivisionError as exc:
            raise DivisionByZero(str(exc), {"mode": self.mode}) from exc

    def inv(self, a: Scalar) -> Scalar:
        return self.div(self.one, a)

    def power(self, a: Scalar, k: int) -> Scalar:
        if k < 0:
            return self.inv(a) ** (-k)
        return a**k

    def q_pow(self, k: int) -> Scalar:
        if k not in self._qpow:
            self._qpow[k] = self.power(self.q, k)
        return self._qpow[k]

    def t_pow(self, k: int) -> Scalar:
        if k not in self._tpow:
            self._tpow[k] = self.power(self.t, k)
        return self._tpow[k]

    def qt(self, a: int, b: int) -> Scalar:
        """q^a t^b."""
        return self.q_pow(a) * self.t_pow(b)

    def render(self, x: Scalar) -> str:
        return str(x)

    def specialize_t(self, x: Scalar, k: int) -> Scalar:
        raise ConfigError("t-specialization needs the exact backend", {"mode": self.mode})


class ExactField(ScalarField):
    """Q(q, t, Z1..Zl) as a sympy FracField; elements are FracElement."""

    mode = "exact"

    def __init__(self, ell: int = 0, t_exponent: Optional[int] = None):
        super().__init__(ell)
        names = param_names(ell)
        built = sympy_field(",".join(names), QQ)
        self.K = built[0]
        self._gens = dict(zip(names, built[1:]))
        self.t_exponent = t_exponent
        if t_exponent is not None:
            # t = q^k throughout; t itself never appears in results
            self._gens["t"] = self._gens["q"] ** t_exponent

    def from_int(self, n: int) -> Scalar:
        return self.K(n)

    def from_fraction(self, value: Fraction) -> Scalar:
        return self.K(value.numerator) / self.K(value.denominator)

    def param(self, name: str) -> Scalar:
        try:
            return self._gens[name]
        except KeyError as exc:
            raise ConfigError(f"unknown parameter {name}") from exc

    def random_element(self, rng: np.random.Generator) -> Scalar:
        gens = list(self._gens.values())

        def poly() -> Scalar:
            acc = self.K(int(rng.integers(-5, 6)))
            for _ in range(3):
                g = gens[int(rng.integers(0, len(gens)))]
                acc += int(rng.integers(-5, 6)) * g ** int(rng.integers(1, 3))
            return acc

        den = poly()
        while not den:
            den = poly()
        return poly() / den

    def specialize_t(self, x: Scalar, k: int) -> Scalar:
        """Substitute t = q^k into an exact scalar."""
        if k < 0:
            raise ConfigError("specialize_t expects k >= 0", {"k": k})
        q, t = self._gens["q"].numer, self._gens["t"].numer
        num = x.numer.compose(t, q**k)
        den = x.denom.compose(t, q**k)
        if not den:
            raise DivisionByZero("denominator vanishes at t = q^k", {"k": k})
        return self.K(num) / self.K(den)


class ModPField(ScalarField):
    """Every parameter specialized to a residue modulo a prime.

    Elements live in sympy's GF(p) domain with residues in [0, p).
    """

    mode = "modp-random"

    def __init__(self, ell: int, prime: int, assignments: Mapping[str, int]):
        super().__init__(ell)
        self.prime = prime
        self.K = GF(prime, symmetric=False)
        self._values = {k: self.K(int(v)) for k, v in assignments.items()}

    def from_int(self, n: int) -> Scalar:
        return self.K(n)

    def residue(self, x: Scalar) -> int:
        return int(x) % self.prime

    def render(self, x: Scalar) -> str:
        return str(self.residue(x))

    def param(self, name: str) -> Scalar:
        try:
            return self._values[name]
        except KeyError as exc:
            raise ConfigError(f"parameter {name} was not drawn") from exc

    def random_element(self, rng: np.random.Generator) -> Scalar:
        return self.K(int(rng.integers(1, self.prime - 1)))


class RationalField(ScalarField):
    """Every parameter specialized to a random rational number."""

    mode = "rational-random"

    def __init__(self, ell: int, assignments: Mapping[str, Fraction]):
        super().__init__(ell)
        self._values = {k: Fraction(v) for k, v in assignments.items()}

    def from_int(self, n: int) -> Scalar:
        return Fraction(n)

    def param(self, name: str) -> Scalar:
        try:
            return self._values[name]
        except KeyError as exc:
            raise ConfigError(f"parameter {name} was not drawn") from exc

    def random_element(self, rng: np.random.Generator) -> Scalar:
        return Fraction(int(rng.integers(-40, 41)) or 1, int(rng.integers(1, 41)))


@dataclass(frozen=True)
class ParamContext:
    """Parameter mode, seed and (in random modes) the drawn values."""

    ell: int = 0
    mode: str = "exact"
    seed: int = 0
    prime: Optional[int] = None
    assignments: Mapping[str, Any] = field(default_factory=dict)
    n: int = 3
    max_degree: int = 4

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ConfigError(f"unknown scalar mode {self.mode!r}", {"modes": MODES})
        if self.ell < 0:
            raise ConfigError("ell must be nonnegative", {"ell": self.ell})
        if self.mode == "exact" and self.assignments:
            raise ConfigError("exact mode takes no assignments")

    @property
    def is_random(self) -> bool:
        return self.mode != "exact"

    def make_field(self) -> ScalarField:
        """Build the backend; random modes draw first if needed."""
        if self.mode == "exact":
            return ExactField(self.ell)
        ctx = self if self.assignments else draw_params(self)
        if ctx.mode == "modp-random":
            return ModPField(ctx.ell, ctx.prime or MERSENNE_61, ctx.assignments)
        return RationalField(ctx.ell, ctx.assignments)


def _blacklisted(values: Mapping[str, Any], bound: int, one: Any) -> bool:
    for v in values.values():
        if v == 0 or v == one:
            return True
    q, t = values["q"], values["t"]
    q_powers: Dict[Any, int] = {one: 0}
    acc = one
    qi = one / q
    for a in range(1, bound + 1):
        acc = acc * q
        # q a root of unity
        if acc == one:
            return True
        q_powers.setdefault(acc, a)
    acc = one
    for a in range(1, bound + 1):
        acc = acc * qi
        q_powers.setdefault(acc, -a)
    # q^a t^b = 1 <=> q^a = t^-b
    acc = one
    ti = one / t
    for b in range(0, bound + 1):
        if acc in q_powers and (b != 0 or q_powers[acc] != 0):
            return True
        acc = acc * ti
    acc = one
    for b in range(1, bound + 1):
        acc = acc * t
        if acc in q_powers:
            return True
    return False


def draw_params(ctx: ParamContext, budget: int = DRAW_BUDGET) -> ParamContext:
    """Draw parameter values deterministically from ctx.seed."""
    if not ctx.is_random:
        raise ConfigError("draw_params needs a random mode")
    rng = np.random.default_rng(ctx.seed)
    bound = 4 * ctx.max_degree * ctx.n
    prime = ctx.prime or MERSENNE_61
    names = param_names(ctx.ell)
    K = GF(prime, symmetric=False)
    for attempt in range(budget):
        if ctx.mode == "modp-random":
            values: Dict[str, Any] = {name: K(int(rng.integers(2, prime - 1))) for name in names}
            one: Any = K.one
        else:
            values = {}
            for name in names:
                num = int(rng.integers(1, 98)) * (1 if rng.integers(0, 2) else -1)
                values[name] = Fraction(num, int(rng.integers(1, 98)))
            one = Fraction(1)
        if not _blacklisted(values, bound, one):
            if attempt:
                log.debug("draw.redrawn", attempts=attempt + 1, seed=ctx.seed)
            plain = {
                k: (int(v) % prime if ctx.mode == "modp-random" else v) for k, v in values.items()
            }
            return replace(
                ctx,
                prime=prime if ctx.mode == "modp-random" else None,
                assignments=plain,
            )
    raise ExhaustedDraws(
        "parameter draw exhausted its budget", {"seed": ctx.seed, "budget": budget}
    )


def make_field(
    mode: str = "exact",
    ell: int = 0,
    seed: int = 0,
    n: int = 3,
    prime: Optional[int] = None,
) -> ScalarField:
    """Shortcut used by suites and tests."""
    return ParamContext(ell=ell, mode=mode, seed=seed, n=n, prime=prime).make_field()


def scalar_arith(field_: ScalarField, a: Scalar, b: Scalar, op: str) -> Scalar:
    """Binary arithmetic with the library's zero-division contract."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return field_.div(a, b)
    raise InvalidArgument(f"unknown scalar op {op!r}")
