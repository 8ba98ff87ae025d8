"""
Sparse incremental row echelon form over a scalar field.

Rows are dicts column -> scalar. Columns are any totally ordered
hashable keys; the pivot of a row is its SMALLEST key, so callers
encode "most significant first" into the key itself. Over a ModPField
the elimination runs on plain ints with Fermat inverses.
"""

import heapq
from typing import Dict, Hashable, Iterable, List, Mapping, Optional

from ..scalars import ModPField, Scalar, ScalarField

Row = Dict[Hashable, Scalar]


class SparseEchelon:
    """Row space of everything added so far, one stored row per pivot."""

    def __init__(self, field: ScalarField):
        self.field = field
        self.prime: Optional[int] = field.prime if isinstance(field, ModPField) else None
        self.pivots: Dict[Hashable, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _lift(self, row: Mapping[Hashable, Scalar]) -> Row:
        if self.prime is None:
            return {k: v for k, v in row.items() if not self.field.is_zero(v)}
        p = self.prime
        out = {}
        for k, v in row.items():
            iv = int(v) % p
            if iv:
                out[k] = iv
        return out

    def _lower(self, row: Row) -> Row:
        if self.prime is None:
            return row
        return {k: self.field.from_int(v) for k, v in row.items()}

    def _is_zero(self, v: Scalar) -> bool:
        return v == 0 if self.prime is not None else self.field.is_zero(v)

    def _scale_inv(self, v: Scalar) -> Scalar:
        if self.prime is not None:
            return pow(v, -1, self.prime)
        return self.field.inv(v)

    def _axpy(self, row: Row, factor: Scalar, other: Row, skip: Hashable) -> Iterable[Hashable]:
        """row -= factor * other; returns the keys that changed."""
        p = self.prime
        touched = []
        for k, v in other.items():
            if k == skip:
                continue
            if p is not None:
                nv = (row.get(k, 0) - factor * v) % p
            else:
                nv = row.get(k, self.field.zero) - factor * v
            if self._is_zero(nv):
                row.pop(k, None)
            else:
                row[k] = nv
            touched.append(k)
        return touched

    def _reduce_lifted(self, row: Row) -> Row:
        heap = [k for k in row if k in self.pivots]
        heapq.heapify(heap)
        while heap:
            col = heapq.heappop(heap)
            factor = row.pop(col, None)
            if factor is None:
                continue
            for k in self._axpy(row, factor, self.pivots[col], col):
                if k in self.pivots and k in row:
                    heapq.heappush(heap, k)
        return row

    def reduce(self, row: Mapping[Hashable, Scalar]) -> Row:
        """Remainder of row after eliminating every pivot column."""
        return self._lower(self._reduce_lifted(self._lift(row)))

    def add(self, row: Mapping[Hashable, Scalar]) -> bool:
        """Insert row; True when the rank grew."""
        reduced = self._reduce_lifted(self._lift(row))
        if not reduced:
            return False
        col = min(reduced)
        inv = self._scale_inv(reduced[col])
        if self.prime is not None:
            self.pivots[col] = {k: v * inv % self.prime for k, v in reduced.items()}
        else:
            self.pivots[col] = {k: v * inv for k, v in reduced.items()}
        return True

    def contains(self, row: Mapping[Hashable, Scalar]) -> bool:
        return not self._reduce_lifted(self._lift(row))

    def reduced_rows(self) -> Dict[Hashable, Row]:
        """Back-substituted (fully reduced) pivot rows, pivot coefficient 1."""
        done: Dict[Hashable, Row] = {}
        for col in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[col])
            tail = sorted(k for k in row if k != col and k in self.pivots)
            for k in tail:
                factor = row.pop(k, None)
                if factor is None:
                    continue
                self._axpy(row, factor, done[k], k)
            done[col] = row
        self.pivots = done
        return {col: self._lower(row) for col, row in done.items()}

    def pivot_keys(self, predicate=None) -> List[Hashable]:
        keys = sorted(self.pivots)
        return [k for k in keys if predicate(k)] if predicate else keys


def rank_of(field: ScalarField, rows: Iterable[Mapping[Hashable, Scalar]]) -> int:
    ech = SparseEchelon(field)
    for row in rows:
        ech.add(row)
    return ech.rank
