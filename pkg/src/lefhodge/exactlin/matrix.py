"""
RatMatrix: immutable matrices over Q with two storage paths.

Dense storage is a numpy object array of Fractions; sparse storage is a
dict-of-rows {row: {col: Fraction}} holding nonzero entries only. Constructors
pick sparse at or below the density threshold (engine.sparse_density_threshold
when none is given); derived matrices keep the threshold of their left operand.
Every operation returns bit-identical results on either path.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

import numpy as np

from src.lefhodge.config import DEFAULT_SETTINGS
from src.lefhodge.errors import DimensionMismatchError, InvalidInputError

Rat = Fraction
RowDict = Dict[int, Fraction]

_to_fraction = np.frompyfunc(Fraction, 1, 1)


def rat(x: int | str | Fraction) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RatMatrix:
    __slots__ = ("rows", "cols", "threshold", "_dense", "_sparse")

    def __init__(
        self,
        rows: int,
        cols: int,
        *,
        dense: np.ndarray | None = None,
        sparse: Dict[int, RowDict] | None = None,
        threshold: float | None = None,
    ) -> None:
        if rows < 0 or cols < 0:
            raise InvalidInputError(f"negative matrix shape {rows}x{cols}")
        if (dense is None) == (sparse is None):
            raise InvalidInputError("RatMatrix needs exactly one storage")
        if dense is not None and dense.shape != (rows, cols):
            raise DimensionMismatchError(f"dense storage {dense.shape} != {(rows, cols)}")
        self.rows = rows
        self.cols = cols
        self.threshold = DEFAULT_SETTINGS.sparse_density_threshold if threshold is None else float(threshold)
        self._dense = dense
        self._sparse = sparse

    # -- construction -----------------------------------------------------

    @classmethod
    def from_entries(
        cls,
        rows: int,
        cols: int,
        entries: Mapping[Tuple[int, int], object] | Iterable[Tuple[Tuple[int, int], object]],
        threshold: float | None = None,
    ) -> "RatMatrix":
        items = entries.items() if isinstance(entries, Mapping) else entries
        sparse: Dict[int, RowDict] = {}
        for (r, c), v in items:
            if not (0 <= r < rows and 0 <= c < cols):
                raise DimensionMismatchError(f"entry ({r}, {c}) outside {rows}x{cols}")
            v = rat(v)
            row = sparse.setdefault(r, {})
            total = row.get(c, Fraction(0)) + v
            if total:
                row[c] = total
            else:
                row.pop(c, None)
                if not row:
                    del sparse[r]
        return cls._auto_from_sparse(rows, cols, sparse, threshold)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[object]], threshold: float | None = None) -> "RatMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if any(len(r) != cols for r in data):
            raise DimensionMismatchError("ragged row lengths")
        return cls.from_entries(
            rows,
            cols,
            (((i, j), v) for i, row in enumerate(data) for j, v in enumerate(row) if v),
            threshold,
        )

    @classmethod
    def from_row_dicts(cls, row_dicts: Sequence[Mapping[int, Fraction]], cols: int,
                       threshold: float | None = None) -> "RatMatrix":
        sparse = {i: {c: rat(v) for c, v in r.items() if v} for i, r in enumerate(row_dicts)}
        sparse = {i: r for i, r in sparse.items() if r}
        return cls._auto_from_sparse(len(row_dicts), cols, sparse, threshold)

    @classmethod
    def zeros(cls, rows: int, cols: int, threshold: float | None = None) -> "RatMatrix":
        return cls(rows, cols, sparse={}, threshold=threshold)

    @classmethod
    def identity(cls, n: int, threshold: float | None = None) -> "RatMatrix":
        return cls._auto_from_sparse(n, n, {i: {i: Fraction(1)} for i in range(n)}, threshold)

    @classmethod
    def _auto_from_sparse(cls, rows: int, cols: int, sparse: Dict[int, RowDict],
                          threshold: float | None) -> "RatMatrix":
        threshold = DEFAULT_SETTINGS.sparse_density_threshold if threshold is None else threshold
        size = rows * cols
        nnz = sum(len(r) for r in sparse.values())
        if size == 0 or nnz / size <= threshold:
            return cls(rows, cols, sparse=sparse, threshold=threshold)
        return cls(rows, cols, dense=_dense_from_sparse(rows, cols, sparse), threshold=threshold)

    @classmethod
    def _auto_from_dense(cls, arr: np.ndarray, threshold: float | None = None) -> "RatMatrix":
        rows, cols = arr.shape
        sparse = _sparse_from_dense(arr)
        return cls._auto_from_sparse(rows, cols, sparse, threshold)

    @classmethod
    def vstack(cls, blocks: Sequence["RatMatrix"], cols: int | None = None) -> "RatMatrix":
        if not blocks:
            return cls.zeros(0, cols or 0)
        width = blocks[0].cols
        if any(b.cols != width for b in blocks):
            raise DimensionMismatchError("vstack of matrices with different column counts")
        sparse: Dict[int, RowDict] = {}
        offset = 0
        for b in blocks:
            for r, row in b._row_items():
                sparse[offset + r] = dict(row)
            offset += b.rows
        return cls._auto_from_sparse(offset, width, sparse, blocks[0].threshold)

    # -- storage ----------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_sparse(self) -> bool:
        return self._sparse is not None

    @property
    def nnz(self) -> int:
        return sum(len(r) for _, r in self._row_items())

    @property
    def density(self) -> float:
        size = self.rows * self.cols
        return self.nnz / size if size else 0.0

    def as_sparse(self) -> "RatMatrix":
        if self.is_sparse:
            return self
        return RatMatrix(self.rows, self.cols, sparse=_sparse_from_dense(self._dense), threshold=self.threshold)

    def _row_items(self) -> Iterator[Tuple[int, RowDict]]:
        if self._sparse is not None:
            for r in sorted(self._sparse):
                yield r, self._sparse[r]
        else:
            yield from sorted(_sparse_from_dense(self._dense).items())

    def row_dicts(self) -> List[RowDict]:
        out: List[RowDict] = [{} for _ in range(self.rows)]
        for r, row in self._row_items():
            out[r] = dict(row)
        return out

    def to_dense(self) -> np.ndarray:
        if self._dense is not None:
            return self._dense.copy()
        return _dense_from_sparse(self.rows, self.cols, self._sparse)

    def entries(self) -> Iterator[Tuple[Tuple[int, int], Fraction]]:
        for r, row in self._row_items():
            for c in sorted(row):
                yield (r, c), row[c]

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        r, c = key
        if self._dense is not None:
            return self._dense[r, c]
        return self._sparse.get(r, {}).get(c, Fraction(0))

    # -- algebra ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and list(self.entries()) == list(other.entries())

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self.entries())))

    def __repr__(self) -> str:
        kind = "sparse" if self.is_sparse else "dense"
        return f"RatMatrix({self.rows}x{self.cols}, {kind}, nnz={self.nnz})"

    @property
    def T(self) -> "RatMatrix":
        if self._dense is not None:
            return RatMatrix(self.cols, self.rows, dense=self._dense.T.copy(), threshold=self.threshold)
        sparse: Dict[int, RowDict] = {}
        for r, row in self._sparse.items():
            for c, v in row.items():
                sparse.setdefault(c, {})[r] = v
        return RatMatrix(self.cols, self.rows, sparse=sparse, threshold=self.threshold)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        if self._dense is not None and other._dense is not None:
            prod = _to_fraction(np.dot(self._dense, other._dense)) if self.cols else \
                _dense_from_sparse(self.rows, other.cols, {})
            return RatMatrix._auto_from_dense(prod, self.threshold)
        right = dict(other._row_items())
        sparse: Dict[int, RowDict] = {}
        for r, row in self._row_items():
            acc: RowDict = {}
            for k, a in row.items():
                for c, b in right.get(k, {}).items():
                    acc[c] = acc.get(c, Fraction(0)) + a * b
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                sparse[r] = acc
        return RatMatrix._auto_from_sparse(self.rows, other.cols, sparse, self.threshold)

    def _combine(self, other: "RatMatrix", sign: int) -> "RatMatrix":
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape mismatch {self.shape} vs {other.shape}")
        entries = list(self.entries()) + [(k, sign * v) for k, v in other.entries()]
        return RatMatrix.from_entries(self.rows, self.cols, entries, self.threshold)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        return self._combine(other, 1)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self._combine(other, -1)

    def scale(self, factor: object) -> "RatMatrix":
        f = rat(factor)
        return RatMatrix.from_entries(self.rows, self.cols, ((k, f * v) for k, v in self.entries()), self.threshold)

    def __neg__(self) -> "RatMatrix":
        return self.scale(-1)

    def __mul__(self, factor: object) -> "RatMatrix":
        return self.scale(factor)

    __rmul__ = __mul__

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "RatMatrix":
        col_pos = {c: j for j, c in enumerate(col_idx)}
        rows = self.row_dicts()
        out = []
        for r in row_idx:
            out.append({col_pos[c]: v for c, v in rows[r].items() if c in col_pos})
        return RatMatrix.from_row_dicts(out, len(col_idx), self.threshold)

    def is_square(self) -> bool:
        return self.rows == self.cols


def _dense_from_sparse(rows: int, cols: int, sparse: Mapping[int, RowDict]) -> np.ndarray:
    arr = np.empty((rows, cols), dtype=object)
    arr.fill(Fraction(0))
    for r, row in sparse.items():
        for c, v in row.items():
            arr[r, c] = v
    return arr


def _sparse_from_dense(arr: np.ndarray) -> Dict[int, RowDict]:
    sparse: Dict[int, RowDict] = {}
    rr, cc = np.nonzero(arr != 0)
    for r, c in zip(rr.tolist(), cc.tolist()):
        sparse.setdefault(r, {})[c] = Fraction(arr[r, c])
    return sparse
