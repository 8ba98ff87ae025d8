"""
Free associative algebra over a scalar field, and matrices over it.

Words are tuples of generator names; a FreeAlgElem is a finite map
word -> scalar with zero coefficients dropped. Matrices embed into the
two-slot space with index (i, k) -> i * n + k.
"""

from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..errors import ShapeMismatch
from ..scalars import Scalar, ScalarField

Word = Tuple[str, ...]


class FreeAlgElem:
    __slots__ = ("field", "terms")

    def __init__(self, field: ScalarField, terms: Optional[Mapping[Word, Scalar]] = None):
        self.field = field
        self.terms: Dict[Word, Scalar] = {
            w: c for w, c in (terms or {}).items() if not field.is_zero(c)
        }

    @classmethod
    def zero(cls, field: ScalarField) -> "FreeAlgElem":
        return cls(field)

    @classmethod
    def scalar(cls, field: ScalarField, c: Scalar) -> "FreeAlgElem":
        return cls(field, {(): c})

    @classmethod
    def one(cls, field: ScalarField) -> "FreeAlgElem":
        return cls.scalar(field, field.one)

    @classmethod
    def gen(cls, field: ScalarField, name: str) -> "FreeAlgElem":
        return cls(field, {(name,): field.one})

    @classmethod
    def word(cls, field: ScalarField, word: Sequence[str], c: Optional[Scalar] = None) -> "FreeAlgElem":
        return cls(field, {tuple(word): field.one if c is None else c})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def generators(self) -> set:
        return {g for w in self.terms for g in w}

    def __add__(self, other: "FreeAlgElem") -> "FreeAlgElem":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return FreeAlgElem(self.field, out)

    def __neg__(self) -> "FreeAlgElem":
        return FreeAlgElem(self.field, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreeAlgElem") -> "FreeAlgElem":
        return self + (-other)

    def scale(self, c: Scalar) -> "FreeAlgElem":
        if self.field.is_zero(c):
            return FreeAlgElem(self.field)
        return FreeAlgElem(self.field, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other: object) -> "FreeAlgElem":
        if not isinstance(other, FreeAlgElem):
            return self.scale(other)
        out: Dict[Word, Scalar] = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                w = wa + wb
                prod = ca * cb
                out[w] = out[w] + prod if w in out else prod
        return FreeAlgElem(self.field, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeAlgElem):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def substitute(self, images: Mapping[str, "FreeAlgElem"]) -> "FreeAlgElem":
        """Algebra map sending each generator to images.get(g, g)."""
        out = FreeAlgElem(self.field)
        for w, c in self.terms.items():
            term = FreeAlgElem.scalar(self.field, c)
            for g in w:
                term = term * images.get(g, FreeAlgElem.gen(self.field, g))
            out = out + term
        return out

    def items(self, key: Optional[Callable[[Word], object]] = None) -> List[Tuple[Word, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]) if key else (len(kv[0]), kv[0]))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            coef = self.field.render(c)
            parts.append(f"({coef})" + ("*" + "*".join(w) if w else ""))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FreeAlgElem({self.render()})"


class FreeMatrix:
    """Rectangular matrix with FreeAlgElem entries."""

    __slots__ = ("field", "entries")

    def __init__(self, field: ScalarField, entries: Sequence[Sequence[FreeAlgElem]]):
        self.field = field
        self.entries: List[List[FreeAlgElem]] = [list(row) for row in entries]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    @classmethod
    def from_scalars(cls, field: ScalarField, rows: Sequence[Sequence[Scalar]]) -> "FreeMatrix":
        return cls(field, [[FreeAlgElem.scalar(field, c) for c in row] for row in rows])

    @classmethod
    def identity(cls, field: ScalarField, size: int) -> "FreeMatrix":
        return cls.from_scalars(
            field, [[field.one if i == j else field.zero for j in range(size)] for i in range(size)]
        )

    @classmethod
    def generators(cls, field: ScalarField, n: int, name: Callable[[int, int], str]) -> "FreeMatrix":
        """n x n matrix of generators name(i, j), 1-based."""
        return cls(field, [[FreeAlgElem.gen(field, name(i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)])

    def __getitem__(self, index: Tuple[int, int]) -> FreeAlgElem:
        i, j = index
        return self.entries[i][j]

    def _zip(self, other: "FreeMatrix", op: Callable[[FreeAlgElem, FreeAlgElem], FreeAlgElem]) -> "FreeMatrix":
        if self.shape != other.shape:
            raise ShapeMismatch("shape mismatch", {"left": self.shape, "right": other.shape})
        return FreeMatrix(
            self.field, [[op(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __add__(self, other: "FreeMatrix") -> "FreeMatrix":
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: "FreeMatrix") -> "FreeMatrix":
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self) -> "FreeMatrix":
        return FreeMatrix(self.field, [[-a for a in row] for row in self.entries])

    def scale(self, c: Scalar) -> "FreeMatrix":
        return FreeMatrix(self.field, [[a.scale(c) for a in row] for row in self.entries])

    def __mul__(self, other: object) -> "FreeMatrix":
        if not isinstance(other, FreeMatrix):
            return self.scale(other)
        rows, inner = self.shape
        inner2, cols = other.shape
        if inner != inner2:
            raise ShapeMismatch("cannot multiply", {"left": self.shape, "right": other.shape})
        out = []
        for i in range(rows):
            row = []
            for j in range(cols):
                acc = FreeAlgElem(self.field)
                for k in range(inner):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return FreeMatrix(self.field, out)

    def substitute(self, images: Mapping[str, FreeAlgElem]) -> "FreeMatrix":
        return FreeMatrix(self.field, [[a.substitute(images) for a in row] for row in self.entries])

    def flat(self) -> Iterable[Tuple[Tuple[int, int], FreeAlgElem]]:
        for i, row in enumerate(self.entries):
            for j, a in enumerate(row):
                yield (i, j), a

    def degree(self) -> int:
        return max((a.degree() for _, a in self.flat()), default=-1)

    def is_zero(self) -> bool:
        return all(a.is_zero() for _, a in self.flat())

    def __repr__(self) -> str:
        return f"FreeMatrix(shape={self.shape})"


def slot1(m: FreeMatrix) -> FreeMatrix:
    """M (x) 1: entry ((i,k),(j,l)) = M_ij delta_kl."""
    n = m.shape[0]
    zero = FreeAlgElem(m.field)
    rows = [[m.entries[a // n][b // n] if a % n == b % n else zero for b in range(n * n)] for a in range(n * n)]
    return FreeMatrix(m.field, rows)


def slot2(m: FreeMatrix) -> FreeMatrix:
    """1 (x) M: entry ((i,k),(j,l)) = delta_ij M_kl."""
    n = m.shape[0]
    zero = FreeAlgElem(m.field)
    rows = [[m.entries[a % n][b % n] if a // n == b // n else zero for b in range(n * n)] for a in range(n * n)]
    return FreeMatrix(m.field, rows)


def product(matrices: Sequence[FreeMatrix]) -> FreeMatrix:
    out = matrices[0]
    for m in matrices[1:]:
        out = out * m
    return out
