"""
Named finitely-presented quantum algebras.

Every presentation lists its generators in rank order: standard
monomials are the words whose letters never decrease in rank, and the
rewriting orientation is degree-lexicographic in the same ranking.
Matrix relations are expanded entry by entry; entries that vanish
identically are counted but not kept.
"""

import hashlib
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..errors import BadIndex, UnknownPresentation
from ..logs import get_logger
from ..scalars import ScalarField
from .freealg import FreeAlgElem, FreeMatrix, Word, slot1, slot2
from .rmatrix import NumericRMatrix, r_matrix

log = get_logger(__name__)

PRESENTATION_NAMES = ("Ref", "W", "D0IV", "D0loc", "D1", "Dl", "Ml")


@dataclass
class Presentation:
    name: str
    n: int
    ell: int
    field: ScalarField
    rmat: NumericRMatrix
    generators: Tuple[str, ...]
    relations: List[FreeAlgElem] = field(default_factory=list)
    labels: List[str] = field(default_factory=list)
    matrices: Dict[str, FreeMatrix] = field(default_factory=dict)
    grading: Dict[str, int] = field(default_factory=dict)
    entries: int = 0
    pbw: bool = True

    def __post_init__(self) -> None:
        self.grading = self.grading or {g: 1 for g in self.generators}
        self._rank = {g: i for i, g in enumerate(self.generators)}

    def __hash__(self) -> int:
        return id(self)

    def __eq__(self, other: object) -> bool:
        return self is other

    @property
    def title(self) -> str:
        return f"{self.name}({self.ell})" if self.name in ("Dl", "Ml") else self.name

    def rank(self, g: str) -> int:
        try:
            return self._rank[g]
        except KeyError as exc:
            raise BadIndex(f"{g!r} is not a generator of {self.title}") from exc

    def word_key(self, word: Word) -> Tuple:
        """Sort key: smaller key means larger in degree-lex order."""
        return (-len(word), tuple(-self._rank[g] for g in word))

    def is_standard(self, word: Word) -> bool:
        return all(self._rank[a] <= self._rank[b] for a, b in zip(word, word[1:]))

    def descending_pairs(self) -> List[Word]:
        gens = self.generators
        return [(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :]]

    def standard_count(self, d: int, exact_degree: bool = False) -> int:
        """Number of nondecreasing words of length <= d (or == d)."""
        size = len(self.generators)
        if exact_degree:
            return comb(size + d - 1, d)
        return comb(size + d, d)

    def relation(self, label: str) -> FreeAlgElem:
        for lab, rel in zip(self.labels, self.relations):
            if lab == label:
                return rel
        raise KeyError(label)

    def relations_with_prefix(self, prefix: str) -> List[Tuple[str, FreeAlgElem]]:
        return [(lab, rel) for lab, rel in zip(self.labels, self.relations) if lab.startswith(prefix + "[")]

    def fingerprint(self) -> str:
        """Structural hash: labels and supporting words, no coefficients."""
        payload = sorted((lab, sorted(" ".join(w) for w in rel.terms)) for lab, rel in zip(self.labels, self.relations))
        return hashlib.sha256(json.dumps(payload).encode()).hexdigest()

    def __repr__(self) -> str:
        return f"Presentation({self.title}, n={self.n}, gens={len(self.generators)}, rels={len(self.relations)})"


class _RelationSink:
    """Expands matrix equations into labelled relation entries."""

    def __init__(self, pres: Presentation):
        self.pres = pres
        rm = pres.rmat
        self.R = rm.free("R")
        self.Rinv = rm.free("Rinv")
        self.R21 = rm.free("R21")
        self.R21inv = rm.free("R21inv")
        self.Omega = rm.free("Omega")
        self.c = pres.field.q - pres.field.inv(pres.field.q)

    def scalar(self, label: str, elem: FreeAlgElem) -> None:
        self.pres.entries += 1
        if not elem.is_zero():
            self.pres.relations.append(elem)
            self.pres.labels.append(label)

    def two_slot(self, label: str, lhs: FreeMatrix, rhs: FreeMatrix) -> None:
        n = self.pres.n
        diff = lhs - rhs
        for (r, s), entry in diff.flat():
            self.pres.entries += 1
            if entry.is_zero():
                continue
            i, k, j, l = r // n + 1, r % n + 1, s // n + 1, s % n + 1
            self.pres.relations.append(entry)
            self.pres.labels.append(f"{label}[{i}{k},{j}{l}]")

    def one_slot(self, label: str, lhs: FreeMatrix, rhs: FreeMatrix) -> None:
        diff = lhs - rhs
        for (r, s), entry in diff.flat():
            self.pres.entries += 1
            if not entry.is_zero():
                self.pres.relations.append(entry)
                self.pres.labels.append(f"{label}[{r + 1},{s + 1}]")


def _matrix(field_: ScalarField, n: int, prefix: str) -> FreeMatrix:
    return FreeMatrix.generators(field_, n, lambda i, j: f"{prefix}{i}{j}")


def _lex(prefix: str, n: int, reverse: bool = False) -> List[str]:
    names = [f"{prefix}{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    return names[::-1] if reverse else names


def _build_ref(field_: ScalarField, n: int, ell: int) -> Presentation:
    pres = Presentation("Ref", n, ell, field_, r_matrix(n, field_), tuple(_lex("m", n)))
    M = _matrix(field_, n, "m")
    pres.matrices["M"] = M
    sink = _RelationSink(pres)
    M1, M2 = slot1(M), slot2(M)
    sink.two_slot("ref", sink.R21 * M1 * sink.R * M2, M2 * sink.R21 * M1 * sink.R)
    return pres


def _build_weyl(field_: ScalarField, n: int, ell: int) -> Presentation:
    xs = [f"x{i}" for i in range(1, n + 1)]
    ds = [f"d{i}" for i in range(1, n + 1)]
    pres = Presentation("W", n, ell, field_, r_matrix(n, field_), tuple(xs + ds))
    sink = _RelationSink(pres)
    q = field_.q
    gen = lambda g: FreeAlgElem.gen(field_, g)  # noqa: E731
    for i in range(n):
        for j in range(i):
            sink.scalar(f"xx[{i + 1},{j + 1}]", gen(xs[i]) * gen(xs[j]) - (gen(xs[j]) * gen(xs[i])).scale(q))
            sink.scalar(
                f"dd[{i + 1},{j + 1}]", gen(ds[i]) * gen(ds[j]) - (gen(ds[j]) * gen(ds[i])).scale(field_.inv(q))
            )
    for i in range(n):
        for j in range(n):
            if i != j:
                sink.scalar(f"dx[{i + 1},{j + 1}]", gen(ds[i]) * gen(xs[j]) - (gen(xs[j]) * gen(ds[i])).scale(q))
        rhs = FreeAlgElem.one(field_) + (gen(xs[i]) * gen(ds[i])).scale(q * q)
        for j in range(i):
            rhs = rhs + (gen(xs[j]) * gen(ds[j])).scale(q * q - field_.one)
        sink.scalar(f"dx[{i + 1},{i + 1}]", gen(ds[i]) * gen(xs[i]) - rhs)
    return pres


def _build_d1(field_: ScalarField, n: int, ell: int) -> Presentation:
    gens = _lex("d", n, reverse=True) + _lex("x", n)
    pres = Presentation("D1", n, ell, field_, r_matrix(n, field_), tuple(gens))
    X, D = _matrix(field_, n, "x"), _matrix(field_, n, "d")
    pres.matrices.update(X=X, D=D)
    s = _RelationSink(pres)
    X1, X2, D1, D2 = slot1(X), slot2(X), slot1(D), slot2(D)
    s.two_slot("rel1", s.R21 * X1 * s.R * X2, X2 * s.R21 * X1 * s.R)
    s.two_slot("rel2", s.Rinv * D1 * s.R21inv * D2, D2 * s.Rinv * D1 * s.R21inv)
    s.two_slot("rel3", D1 * s.R21inv * X2 * s.R21, s.R * X2 * s.R21 * D1 + (s.R * s.Omega).scale(s.c))
    return pres


def _d0_relations(pres: Presentation, s: _RelationSink) -> None:
    A, B = pres.matrices["A"], pres.matrices["B"]
    A1, A2, B1, B2 = slot1(A), slot2(A), slot1(B), slot2(B)
    s.two_slot("DAA", s.R21 * A1 * s.R * A2, A2 * s.R21 * A1 * s.R)
    s.two_slot("DBB", s.Rinv * B1 * s.R21inv * B2, B2 * s.Rinv * B1 * s.R21inv)
    s.two_slot("DAB", B1 * s.R21inv * A2 * s.R21, s.R * A2 * s.R21 * B1)


def _build_d0iv(field_: ScalarField, n: int, ell: int) -> Presentation:
    gens = _lex("a", n) + _lex("b", n, reverse=True)
    pres = Presentation("D0IV", n, ell, field_, r_matrix(n, field_), tuple(gens))
    pres.matrices.update(A=_matrix(field_, n, "a"), B=_matrix(field_, n, "b"))
    _d0_relations(pres, _RelationSink(pres))
    return pres


def _build_d0loc(field_: ScalarField, n: int, ell: int) -> Presentation:
    gens = _lex("a", n) + _lex("abar", n) + _lex("b", n, reverse=True)
    pres = Presentation("D0loc", n, ell, field_, r_matrix(n, field_), tuple(gens), pbw=False)
    A, Abar, B = _matrix(field_, n, "a"), _matrix(field_, n, "abar"), _matrix(field_, n, "b")
    pres.matrices.update(A=A, B=B, Abar=Abar)
    s = _RelationSink(pres)
    _d0_relations(pres, s)
    eye = FreeMatrix.identity(field_, n)
    s.one_slot("inv_right", A * Abar, eye)
    s.one_slot("inv_left", Abar * A, eye)
    A1, Ab1, Ab2, B1 = slot1(A), slot1(Abar), slot2(Abar), slot1(B)
    s.two_slot("DAbarAbar", Ab2 * s.Rinv * Ab1 * s.R21inv, s.Rinv * Ab1 * s.R21inv * Ab2)
    s.two_slot("DBAbar", B1 * s.R21inv * Ab2, s.R21inv * Ab2 * s.Rinv * B1 * s.R21inv)
    s.two_slot("DAbarA", Ab2 * s.R21 * A1 * s.R, s.R21 * A1 * s.R * Ab2)
    return pres


def _cyc(a: int, ell: int) -> int:
    """Residue of a in 1..ell."""
    return (a - 1) % ell + 1


def _dell_generators(n: int, ell: int) -> List[str]:
    xs = [f"x{a}_{i}{j}" for a in range(1, ell + 1) for i in range(1, n + 1) for j in range(1, n + 1)]
    ds = [f"d{a}_{i}{j}" for a in range(1, ell + 1) for i in range(1, n + 1) for j in range(1, n + 1)]
    return xs + ds


def _dell_relations(pres: Presentation) -> None:
    n, ell, field_ = pres.n, pres.ell, pres.field
    s = _RelationSink(pres)
    X = {a: _matrix(field_, n, f"x{a}_") for a in range(1, ell + 1)}
    D = {a: _matrix(field_, n, f"d{a}_") for a in range(1, ell + 1)}
    for a in range(1, ell + 1):
        pres.matrices[f"X{a}"] = X[a]
        pres.matrices[f"D{a}"] = D[a]
    R, Rinv, R21, R21inv = s.R, s.Rinv, s.R21, s.R21inv

    for a in range(1, ell + 1):
        s.two_slot(f"Xaa({a})", R21 * slot1(X[a]) * slot2(X[a]), slot2(X[a]) * slot1(X[a]) * R)
        s.two_slot(f"Daa({a})", R21 * slot1(D[a]) * slot2(D[a]), slot2(D[a]) * slot1(D[a]) * R)
        s.two_slot(
            f"DXa({a})",
            slot2(D[a]) * Rinv * slot1(X[a]),
            slot1(X[a]) * R * slot2(D[a]) + s.Omega.scale(s.c),
        )

    for a in range(1, ell + 1):
        for b in range(a + 1, ell + 1):
            if ell == 2:
                s.two_slot("XXad2", slot1(X[2]) * R * slot2(X[1]), slot2(X[1]) * R21 * slot1(X[2]))
                s.two_slot("DDadj2", slot1(D[1]) * R21inv * slot2(D[2]), slot2(D[2]) * Rinv * slot1(D[1]))
                continue
            if _cyc(a - 1, ell) == b or _cyc(b - 1, ell) == a:
                hi, lo = (a, b) if _cyc(a - 1, ell) == b else (b, a)
                s.two_slot(f"XXad({hi},{lo})", slot1(X[hi]) * slot2(X[lo]), slot2(X[lo]) * R21 * slot1(X[hi]))
                # lo + 1 == hi
                s.two_slot(f"DDadj({lo},{hi})", slot1(D[lo]) * slot2(D[hi]), slot2(D[hi]) * Rinv * slot1(D[lo]))
            else:
                s.two_slot(f"XXcom({a},{b})", slot1(X[a]) * slot2(X[b]), slot2(X[b]) * slot1(X[a]))
                s.two_slot(f"Dcom({a},{b})", slot1(D[a]) * slot2(D[b]), slot2(D[b]) * slot1(D[a]))

    for a in range(1, ell + 1):
        for b in range(1, ell + 1):
            if a == b:
                continue
            D1a, X2b = slot1(D[a]), slot2(X[b])
            if ell == 2:
                s.two_slot(f"DX2({a},{b})", D1a * X2b, R * X2b * D1a * R21inv)
            elif b == _cyc(a + 1, ell):
                s.two_slot(f"DXadj1({a},{b})", D1a * X2b, R * X2b * D1a)
            elif b == _cyc(a - 1, ell):
                s.two_slot(f"DXadj2({a},{b})", D1a * X2b, X2b * D1a * R21inv)
            else:
                s.two_slot(f"DXcom({a},{b})", D1a * X2b, X2b * D1a)


def _build_dell(field_: ScalarField, n: int, ell: int) -> Presentation:
    if ell < 2:
        raise BadIndex("Dl needs ell >= 2; ell = 1 is D1", {"ell": ell})
    pres = Presentation("Dl", n, ell, field_, r_matrix(n, field_), tuple(_dell_generators(n, ell)))
    _dell_relations(pres)
    return pres


def ml_weight(name: str, n: int, ell: int) -> Tuple[int, ...]:
    """Torus weight used by the braided join of D_ell with W."""
    w = [0] * n
    if name.startswith("w"):
        i = int(name[2:]) - 1
        w[i] = -1 if name[1] == "x" else 1
        return tuple(w)
    kind, rest = name[0], name[1:]
    a_str, ij = rest.split("_")
    a, i, j = int(a_str), int(ij[0]) - 1, int(ij[1]) - 1
    if kind == "x" and a == 1:
        w[i] = -1
    elif kind == "x" and a == ell:
        w[j] = 1
    elif kind == "d" and a == 1:
        w[j] = 1
    elif kind == "d" and a == ell:
        w[i] = -1
    return tuple(w)


def _build_ml(field_: ScalarField, n: int, ell: int) -> Presentation:
    if ell < 2:
        raise BadIndex("Ml needs ell >= 2", {"ell": ell})
    dell = _dell_generators(n, ell)
    weyl = [f"wx{i}" for i in range(1, n + 1)] + [f"wd{i}" for i in range(1, n + 1)]
    pres = Presentation("Ml", n, ell, field_, r_matrix(n, field_), tuple(dell + weyl))
    _dell_relations(pres)
    sink = _RelationSink(pres)
    weyl_part = _build_weyl(field_, n, ell)
    rename = {f"x{i}": f"wx{i}" for i in range(1, n + 1)}
    rename.update({f"d{i}": f"wd{i}" for i in range(1, n + 1)})
    images = {k: FreeAlgElem.gen(field_, v) for k, v in rename.items()}
    for lab, rel in zip(weyl_part.labels, weyl_part.relations):
        sink.scalar("W" + lab, rel.substitute(images))
    for w in weyl:
        ww = ml_weight(w, n, ell)
        for g in dell:
            pairing = sum(x * y for x, y in zip(ww, ml_weight(g, n, ell)))
            elem = FreeAlgElem.word(field_, (w, g)) - FreeAlgElem.word(field_, (g, w), field_.q_pow(pairing))
            sink.scalar(f"cross[{w},{g}]", elem)
    return pres


_BUILDERS: Dict[str, Callable[[ScalarField, int, int], Presentation]] = {
    "Ref": _build_ref,
    "W": _build_weyl,
    "D0IV": _build_d0iv,
    "D0loc": _build_d0loc,
    "D1": _build_d1,
    "Dl": _build_dell,
    "Ml": _build_ml,
}


@lru_cache(maxsize=64)
def _cached(name: str, n: int, ell: int, field_: ScalarField) -> Presentation:
    pres = _BUILDERS[name](field_, n, ell)
    log.debug("presentation.built", name=pres.title, n=n, relations=len(pres.relations), entries=pres.entries)
    return pres


def parse_presentation_name(name: str, ell: Optional[int] = None) -> Tuple[str, int]:
    """Accepts "Dl", "Dl(2)", "Ml(3)" and the plain names."""
    base, arg = name, None
    if "(" in name and name.endswith(")"):
        base, arg = name[: name.index("(")], name[name.index("(") + 1 : -1]
    if base not in _BUILDERS:
        raise UnknownPresentation(f"unknown presentation {name!r}", {"known": PRESENTATION_NAMES})
    if arg is not None:
        try:
            ell = int(arg)
        except ValueError as exc:
            raise UnknownPresentation(f"bad parameter in {name!r}") from exc
    if base in ("Dl", "Ml"):
        ell = 2 if ell is None else ell
    return base, ell or 0


def build_presentation(name: str, n: int, field_: ScalarField, ell: Optional[int] = None) -> Presentation:
    """Build (or fetch) the named presentation over field_."""
    base, ell_ = parse_presentation_name(name, ell)
    if n < 1:
        raise BadIndex("rank must be positive", {"n": n})
    return _cached(base, n, ell_, field_)


def word_of(pres: Presentation, names: Sequence[str]) -> FreeAlgElem:
    for g in names:
        pres.rank(g)
    return FreeAlgElem.word(pres.field, tuple(names))
