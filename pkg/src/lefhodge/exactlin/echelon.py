"""
Reduced row echelon form over Q.

`EchelonBuilder` keeps a fully reduced basis keyed by pivot column and accepts
rows one at a time; it backs the sparse path, subspace canonicalization and
sums. `rref_dense` is the vectorized numpy path for dense matrices.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Tuple

import numpy as np

from src.lefhodge.exactlin.matrix import RatMatrix, RowDict


class EchelonBuilder:
    """Online RREF: every stored row has leading coefficient 1 and zeros in the other pivot columns."""

    __slots__ = ("_rows",)

    def __init__(self) -> None:
        self._rows: Dict[int, RowDict] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def reduce(self, row: Mapping[int, Fraction]) -> RowDict:
        """Residual of `row` modulo the current span (reduced in the pivot columns)."""
        out: RowDict = {c: v for c, v in row.items() if v}
        for p in sorted(set(out) & self._rows.keys()):
            coef = out.get(p)
            if not coef:
                continue
            for c, v in self._rows[p].items():
                nv = out.get(c, Fraction(0)) - coef * v
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
        return out

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Insert a row; returns True when it enlarged the span."""
        res = self.reduce(row)
        if not res:
            return False
        lead = min(res)
        inv = 1 / res[lead]
        res = {c: v * inv for c, v in res.items()}
        for p, other in self._rows.items():
            coef = other.get(lead)
            if coef:
                for c, v in res.items():
                    nv = other.get(c, Fraction(0)) - coef * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        self._rows[lead] = res
        return True

    def extend(self, rows: Iterable[Mapping[int, Fraction]]) -> "EchelonBuilder":
        for r in rows:
            self.add(r)
        return self

    def rows(self) -> List[Tuple[int, RowDict]]:
        return [(p, self._rows[p]) for p in sorted(self._rows)]


def rref_dense(arr: np.ndarray) -> Tuple[List[RowDict], List[int]]:
    """Gauss-Jordan on a numpy object array of Fractions."""
    a = arr.copy()
    n_rows, n_cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        nz = np.nonzero(a[r:, c] != 0)[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] / a[r, c]
        factors = a[:, c].copy()
        factors[r] = Fraction(0)
        mask = factors != 0
        if mask.any():
            a[mask] = a[mask] - np.outer(factors[mask], a[r])
        pivots.append(c)
        r += 1
    rows: List[RowDict] = []
    for i in range(r):
        idx = np.nonzero(a[i] != 0)[0]
        rows.append({int(c): Fraction(a[i, c]) for c in idx})
    return rows, pivots


def rref_rows(m: RatMatrix) -> Tuple[List[RowDict], List[int]]:
    """RREF rows (nonzero only) and pivot columns; dispatches on storage."""
    if not m.is_sparse:
        return rref_dense(m.to_dense())
    b = EchelonBuilder().extend(m.row_dicts())
    rows = b.rows()
    return [r for _, r in rows], [p for p, _ in rows]
