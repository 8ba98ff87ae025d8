"""
Matrix identities checked entry by entry modulo a presentation.

Identities involving inverse generator matrices are stated in their
multiplied-through form; scalar matrices (R, R^-1, R21, Omega) may
appear freely.
"""

from itertools import permutations
from typing import Callable, List, Optional, Tuple

from ..errors import DegreeOverflow
from ..logs import get_logger
from ..report import Report, ReportBuilder
from ..scalars import ParamContext
from .audit import DEFAULT_SLACK, require_member
from .freealg import FreeAlgElem, FreeMatrix, product, slot1, slot2
from .presentations import Presentation, build_presentation

log = get_logger(__name__)

Identity = Tuple[str, FreeMatrix, FreeMatrix]


def _entry_label(shape: Tuple[int, int], n: int, r: int, s: int) -> str:
    if shape == (n * n, n * n):
        return f"[{r // n + 1}{r % n + 1},{s // n + 1}{s % n + 1}]"
    return f"[{r + 1},{s + 1}]"


def record_identity(
    builder: ReportBuilder,
    pres: Presentation,
    lhs: FreeMatrix,
    rhs: FreeMatrix,
    d: int,
    name: str,
    slack: int = DEFAULT_SLACK,
) -> None:
    """Adds one check per entry of lhs - rhs to builder."""
    diff = lhs - rhs
    if diff.degree() > d:
        raise DegreeOverflow(f"{name} has entries of degree {diff.degree()}", {"d": d})
    for (r, s), entry in diff.flat():
        label = name + _entry_label(diff.shape, pres.n, r, s)
        builder.run(label, lambda entry=entry, label=label: require_member(pres, entry, d, label, slack))


def check_matrix_identity(
    pres: Presentation,
    lhs: FreeMatrix,
    rhs: FreeMatrix,
    d: int,
    name: str = "identity",
    slack: int = DEFAULT_SLACK,
) -> Report:
    """Every entry of lhs - rhs must reduce to zero modulo pres at degree d."""
    builder = ReportBuilder("matrix-identity", {"presentation": pres.title, "n": pres.n, "degree": d})
    record_identity(builder, pres, lhs, rhs, d, name, slack)
    return builder.build()


def _eye(pres: Presentation) -> FreeMatrix:
    return FreeMatrix.identity(pres.field, pres.n)


def d1_identities(pres: Presentation) -> List[Identity]:
    rm = pres.rmat
    R, Rinv, R21, R21inv = rm.free("R"), rm.free("Rinv"), rm.free("R21"), rm.free("R21inv")
    X, D = pres.matrices["X"], pres.matrices["D"]
    LY = _eye(pres) + X * D
    RY = _eye(pres) + D * X
    LY1, LY2, RY1, RY2 = slot1(LY), slot2(LY), slot1(RY), slot2(RY)
    X2, D2 = slot2(X), slot2(D)
    return [
        ("D1YL1", Rinv * LY1 * R21inv * LY2, LY2 * Rinv * LY1 * R21inv),
        ("D1YR1", R21 * RY1 * R * RY2, RY2 * R21 * RY1 * R),
        ("D1YL2", LY1 * R21inv * X2, R * X2 * R21 * LY1 * R21inv),
        ("D1YL3", LY1 * R21inv * D2, R21inv * D2 * Rinv * LY1 * R21inv),
        ("D1YR2", RY1 * R * X2, R * X2 * R21 * RY1 * R),
        ("D1YR3", RY1 * R * D2, R21inv * D2 * Rinv * RY1 * R),
    ]


def x_circ(pres: Presentation) -> FreeMatrix:
    return product([pres.matrices[f"X{a}"] for a in range(1, pres.ell + 1)])


def quantum_determinant(field_, m: FreeMatrix, column: bool = True) -> FreeAlgElem:
    """sum_w (-q)^{l(w)} m_{w(1)1}...m_{w(n)n} (column) or m_{1w(1)}...m_{nw(n)} (row)."""
    n = m.shape[0]
    out = FreeAlgElem(field_)
    q = field_.q
    for w in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
        term = FreeAlgElem.scalar(field_, field_.power(-q, inversions))
        for k in range(n):
            term = term * (m[w[k], k] if column else m[k, w[k]])
        out = out + term
    return out


def dell_identities(pres: Presentation) -> List[Identity]:
    rm = pres.rmat
    R, R21, Rinv, R21inv = rm.free("R"), rm.free("R21"), rm.free("Rinv"), rm.free("R21inv")
    ell = pres.ell
    out: List[Identity] = []
    X1m, D1m = pres.matrices["X1"], pres.matrices["D1"]
    LY = _eye(pres) + X1m * D1m
    RY = _eye(pres) + D1m * X1m
    X2, D2 = slot2(X1m), slot2(D1m)
    out += [
        ("YR1", slot1(RY) * X2, X2 * R21 * slot1(RY) * R),
        ("YR2", slot1(RY) * R * D2, R21inv * D2 * slot1(RY)),
        ("YL1", slot1(LY) * R21inv * X2, R * X2 * slot1(LY)),
        ("YL2", slot1(LY) * D2 * R21, D2 * Rinv * slot1(LY)),
    ]
    Xc = x_circ(pres)
    first, last = pres.matrices["X1"], pres.matrices[f"X{ell}"]
    out += [
        ("X1circ", slot1(first) * slot2(Xc), R21inv * slot2(Xc) * R21 * slot1(first)),
        ("Xellcirc", slot1(Xc) * slot2(last), slot2(last) * R21 * slot1(Xc) * R21inv),
    ]
    for a in range(2, ell):
        Xa = pres.matrices[f"X{a}"]
        out.append((f"Xcirc({a})", slot1(Xa) * slot2(Xc), slot2(Xc) * slot1(Xa)))
    return out


def determinant_identities(pres: Presentation, a: int = 1) -> List[Identity]:
    """det_q(X^(a)) commutes with every entry of X^(a)."""
    Xa = pres.matrices[f"X{a}"] if f"X{a}" in pres.matrices else pres.matrices["X"]
    det = quantum_determinant(pres.field, Xa)
    n = pres.n
    lhs = FreeMatrix(pres.field, [[det * Xa[i, j] for j in range(n)] for i in range(n)])
    rhs = FreeMatrix(pres.field, [[Xa[i, j] * det for j in range(n)] for i in range(n)])
    return [(f"det_central({a})", lhs, rhs)]


def weyl_identities(pres: Presentation) -> List[Identity]:
    """The R-matrix form of the Weyl relations, as V*(x)V component arrays."""
    f, n = pres.field, pres.n
    R = pres.rmat.matrix
    q, qi = f.q, f.inv(f.q)
    x = [FreeAlgElem.gen(f, f"x{i}") for i in range(1, n + 1)]
    d = [FreeAlgElem.gen(f, f"d{i}") for i in range(1, n + 1)]
    Rf = pres.rmat.free("R")
    x1x2 = FreeMatrix(f, [[(x[i] * x[j]).scale(q) for i in range(n) for j in range(n)]])
    x2x1 = FreeMatrix(f, [[x[j] * x[i] for i in range(n) for j in range(n)]])
    d1d2 = FreeMatrix(f, [[(d[i] * d[j]).scale(q)] for i in range(n) for j in range(n)])
    d2d1 = FreeMatrix(f, [[d[j] * d[i]] for i in range(n) for j in range(n)])
    zero = FreeAlgElem(f)
    lhs3, rhs3 = [], []
    for c in range(n):
        lrow, rrow = [], []
        for b in range(n):
            lrow.append((d[b] * x[c]).scale(qi))
            acc = FreeAlgElem.scalar(f, qi) if b == c else zero
            for i in range(n):
                for l in range(n):
                    coef = R[i * n + b, c * n + l]
                    if not f.is_zero(coef):
                        acc = acc + (x[i] * d[l]).scale(coef)
            rrow.append(acc)
        lhs3.append(lrow)
        rhs3.append(rrow)
    return [
        ("WeylR_xx", x1x2, x2x1 * Rf),
        ("WeylR_dd", d1d2, Rf * d2d1),
        ("WeylR_dx", FreeMatrix(f, lhs3), FreeMatrix(f, rhs3)),
    ]


def _run_identities(builder: ReportBuilder, pres: Presentation, items: List[Identity], d: int, prefix: str) -> None:
    for name, lhs, rhs in items:
        try:
            record_identity(builder, pres, lhs, rhs, d, prefix + name)
        except DegreeOverflow as exc:
            builder.run(prefix + name, lambda exc=exc: (False, str(exc)))


def identity_suite(n: int, ell: int = 2, ctx: Optional[ParamContext] = None, d: int = 4) -> Report:
    """Moment-map, X-circle, determinant and Weyl R-form identities."""
    ctx = ctx or ParamContext(mode="modp-random", seed=1)
    field_ = ctx.make_field()
    builder = ReportBuilder("identity-suite", {"n": n, "ell": ell, "degree": d, "mode": ctx.mode, "seed": ctx.seed})
    d1 = build_presentation("D1", n, field_)
    _run_identities(builder, d1, d1_identities(d1), d, "D1:")
    ell = max(ell, 2)
    dell = build_presentation("Dl", n, field_, ell=ell)
    _run_identities(builder, dell, dell_identities(dell), max(d, ell + 1), f"Dl({ell}):")
    _run_identities(builder, dell, determinant_identities(dell, 1), max(d, n + 1), f"Dl({ell}):")
    weyl = build_presentation("W", n, field_)
    _run_identities(builder, weyl, weyl_identities(weyl), 2, "W:")
    return builder.build()


IDENTITY_FAMILIES: Tuple[Tuple[str, Callable[[Presentation], List[Identity]]], ...] = (
    ("D1", d1_identities),
    ("Dl", dell_identities),
    ("W", weyl_identities),
)
