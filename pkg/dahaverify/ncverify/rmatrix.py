"""
The specialized R-matrix on V (x) V and its scalar companions.

Matrices are numpy object arrays over a ScalarField; the basis vector
e_i (x) e_j sits at index i * n + j (0-based).
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from ..errors import BadIndex, DivisionByZero
from ..logs import get_logger
from ..report import Report, ReportBuilder
from ..scalars import ParamContext, ScalarField
from .freealg import FreeMatrix

log = get_logger(__name__)


def zeros(field: ScalarField, size: int) -> np.ndarray:
    out = np.empty((size, size), dtype=object)
    out.fill(field.zero)
    return out


def identity(field: ScalarField, size: int) -> np.ndarray:
    out = zeros(field, size)
    for i in range(size):
        out[i, i] = field.one
    return out


def scaled_identity(field: ScalarField, size: int, c) -> np.ndarray:
    out = zeros(field, size)
    for i in range(size):
        out[i, i] = c
    return out


def matmul(a: np.ndarray, b: np.ndarray, field: ScalarField) -> np.ndarray:
    rows, inner = a.shape
    out = zeros(field, rows)
    for i in range(rows):
        for k in range(inner):
            if field.is_zero(a[i, k]):
                continue
            for j in range(b.shape[1]):
                if not field.is_zero(b[k, j]):
                    out[i, j] = out[i, j] + a[i, k] * b[k, j]
    return out


def is_zero_matrix(a: np.ndarray, field: ScalarField) -> bool:
    return all(field.is_zero(v) for v in a.flat)


def invert(a: np.ndarray, field: ScalarField) -> np.ndarray:
    """Gauss-Jordan inverse over the field."""
    size = a.shape[0]
    work = np.concatenate([a.copy(), identity(field, size)], axis=1)
    for c in range(size):
        pivot = next((r for r in range(c, size) if not field.is_zero(work[r, c])), None)
        if pivot is None:
            raise DivisionByZero("matrix is singular", {"column": c})
        if pivot != c:
            work[[c, pivot], :] = work[[pivot, c], :]
        inv = field.inv(work[c, c])
        work[c, :] = [v * inv for v in work[c, :]]
        for r in range(size):
            if r != c and not field.is_zero(work[r, c]):
                f = work[r, c]
                work[r, :] = [x - f * y for x, y in zip(work[r, :], work[c, :])]
    return work[:, size:]


def flip(field: ScalarField, n: int) -> np.ndarray:
    """tau = Omega = sum E_ij (x) E_ji."""
    out = zeros(field, n * n)
    for i in range(n):
        for j in range(n):
            out[i * n + j, j * n + i] = field.one
    return out


def embed12(m: np.ndarray, n: int, field: ScalarField) -> np.ndarray:
    """M (x) 1 on V^{(x)3}."""
    out = zeros(field, n**3)
    for a in range(n * n):
        for b in range(n * n):
            if field.is_zero(m[a, b]):
                continue
            for k in range(n):
                out[a * n + k, b * n + k] = m[a, b]
    return out


def embed23(m: np.ndarray, n: int, field: ScalarField) -> np.ndarray:
    """1 (x) M on V^{(x)3}."""
    out = zeros(field, n**3)
    for i in range(n):
        for a in range(n * n):
            for b in range(n * n):
                if not field.is_zero(m[a, b]):
                    out[i * n * n + a, i * n * n + b] = m[a, b]
    return out


def embed13(m: np.ndarray, n: int, field: ScalarField) -> np.ndarray:
    """M acting on tensor factors 1 and 3."""
    out = zeros(field, n**3)
    for i in range(n):
        for k in range(n):
            for j in range(n):
                for l in range(n):
                    v = m[i * n + k, j * n + l]
                    if field.is_zero(v):
                        continue
                    for mid in range(n):
                        out[(i * n + mid) * n + k, (j * n + mid) * n + l] = v
    return out


@dataclass(frozen=True)
class NumericRMatrix:
    n: int
    field: ScalarField
    matrix: np.ndarray

    @cached_property
    def inverse(self) -> np.ndarray:
        return invert(self.matrix, self.field)

    @cached_property
    def r21(self) -> np.ndarray:
        tau = flip(self.field, self.n)
        return matmul(matmul(tau, self.matrix, self.field), tau, self.field)

    @cached_property
    def r21_inverse(self) -> np.ndarray:
        return invert(self.r21, self.field)

    def free(self, which: str = "R") -> FreeMatrix:
        """The scalar matrix as a FreeMatrix: R, Rinv, R21, R21inv, Omega, I."""
        table = {
            "R": lambda: self.matrix,
            "Rinv": lambda: self.inverse,
            "R21": lambda: self.r21,
            "R21inv": lambda: self.r21_inverse,
            "Omega": lambda: flip(self.field, self.n),
            "I": lambda: identity(self.field, self.n * self.n),
        }
        if which not in table:
            raise BadIndex(f"unknown scalar matrix {which!r}")
        return FreeMatrix.from_scalars(self.field, table[which]().tolist())


def r_matrix(n: int, field: ScalarField) -> NumericRMatrix:
    """R = q sum E_ii(x)E_ii + sum_{i!=j} E_ii(x)E_jj + (q - q^-1) sum_{i>j} E_ji(x)E_ij."""
    if n < 1:
        raise BadIndex("rank must be positive", {"n": n})
    q = field.q
    m = zeros(field, n * n)
    for i in range(n):
        for j in range(n):
            m[i * n + j, i * n + j] = q if i == j else field.one
    for i in range(n):
        for j in range(i):
            # E_ji (x) E_ij: row e_j (x) e_i, column e_i (x) e_j
            m[j * n + i, i * n + j] = q - field.inv(q)
    return NumericRMatrix(n, field, m)


def qybe_sides(r: NumericRMatrix):
    f, n = r.field, r.n
    r12, r13, r23 = embed12(r.matrix, n, f), embed13(r.matrix, n, f), embed23(r.matrix, n, f)
    lhs = matmul(matmul(r12, r13, f), r23, f)
    rhs = matmul(matmul(r23, r13, f), r12, f)
    return lhs, rhs


def hecke_defect(r: NumericRMatrix) -> np.ndarray:
    """tau R - R^-1 tau - (q - q^-1) Id."""
    f, n = r.field, r.n
    tau = flip(f, n)
    c = f.q - f.inv(f.q)
    out = matmul(tau, r.matrix, f) - matmul(r.inverse, tau, f)
    return out - scaled_identity(f, n * n, c)


def check_r_constants(n: int, ctx: Optional[ParamContext] = None) -> Report:
    ctx = ctx or ParamContext(mode="exact")
    field = ctx.make_field()
    r = r_matrix(n, field)
    builder = ReportBuilder("r-constants", {"n": n, "mode": ctx.mode, "seed": ctx.seed})

    def qybe() -> bool:
        lhs, rhs = qybe_sides(r)
        return is_zero_matrix(lhs - rhs, field)

    builder.run("qybe", qybe)
    builder.run("hecke", lambda: is_zero_matrix(hecke_defect(r), field))
    builder.run("inverse", lambda: is_zero_matrix(matmul(r.matrix, r.inverse, field) - identity(field, n * n), field))
    builder.run("r21_flip", lambda: is_zero_matrix(r.r21 - matmul(matmul(flip(field, n), r.matrix, field), flip(field, n), field), field))
    return builder.build()
