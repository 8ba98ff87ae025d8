"""Truncated power series with Laurent-polynomial coefficients."""

from typing import List, Sequence

from ..errors import InvalidArgument
from ..laurent import LaurentPoly
from ..scalars import ScalarField


class TruncatedSeries:
    """sum_{k < order} coeffs[k] u^k."""

    __slots__ = ("field", "n", "coeffs")

    def __init__(self, field: ScalarField, n: int, coeffs: Sequence[LaurentPoly]):
        self.field = field
        self.n = n
        self.coeffs: List[LaurentPoly] = list(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def one(cls, field: ScalarField, n: int, order: int) -> "TruncatedSeries":
        coeffs = [LaurentPoly.zero(field, n) for _ in range(order)]
        coeffs[0] = LaurentPoly.one(field, n)
        return cls(field, n, coeffs)

    @classmethod
    def linear(cls, a: LaurentPoly, order: int) -> "TruncatedSeries":
        """1 - a u."""
        out = cls.one(a.field, a.n, order)
        if order > 1:
            out.coeffs[1] = -a
        return out

    @classmethod
    def geometric(cls, a: LaurentPoly, order: int) -> "TruncatedSeries":
        """1 / (1 - a u)."""
        coeffs = [LaurentPoly.one(a.field, a.n)]
        for _ in range(1, order):
            coeffs.append(coeffs[-1] * a)
        return cls(a.field, a.n, coeffs)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        out = [LaurentPoly.zero(self.field, self.n) for _ in range(order)]
        for i in range(order):
            if self.coeffs[i].is_zero():
                continue
            for j in range(order - i):
                if not other.coeffs[j].is_zero():
                    out[i + j] = out[i + j] + self.coeffs[i] * other.coeffs[j]
        return TruncatedSeries(self.field, self.n, out)

    def scale(self, c: object) -> "TruncatedSeries":
        return TruncatedSeries(self.field, self.n, [p.scale(c) for p in self.coeffs])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(self.field, self.n, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def coefficient(self, k: int) -> LaurentPoly:
        if 0 <= k < self.order:
            return self.coeffs[k]
        return LaurentPoly.zero(self.field, self.n)

    def log(self) -> "TruncatedSeries":
        """log of a series with constant term 1."""
        if self.coeffs[0] != LaurentPoly.one(self.field, self.n):
            raise InvalidArgument("log needs constant term 1")
        g = self - TruncatedSeries.one(self.field, self.n, self.order)
        out = TruncatedSeries(self.field, self.n, [LaurentPoly.zero(self.field, self.n)] * self.order)
        power = TruncatedSeries.one(self.field, self.n, self.order)
        for k in range(1, self.order):
            power = power * g
            sign = 1 if k % 2 else -1
            term = power.scale(self.field.div(self.field.from_int(sign), self.field.from_int(k)))
            out = TruncatedSeries(self.field, self.n, [a + b for a, b in zip(out.coeffs, term.coeffs)])
        return out
