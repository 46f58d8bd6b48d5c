"""
SubspaceBasis: a subspace of Q^n stored in reduced row echelon form, so two
bases of the same subspace are equal as values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Mapping, Sequence, Tuple, Union

from src.lefhodge.errors import DimensionMismatchError
from src.lefhodge.exactlin.echelon import EchelonBuilder
from src.lefhodge.exactlin.matrix import RatMatrix, RowDict, rat

SparseRow = Tuple[Tuple[int, Fraction], ...]
VectorLike = Union[Sequence[object], Mapping[int, object]]


def _as_row(v: VectorLike, ambient_dim: int) -> RowDict:
    if isinstance(v, Mapping):
        row = {int(c): rat(x) for c, x in v.items() if x}
    else:
        if len(v) != ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)} in ambient {ambient_dim}")
        row = {c: rat(x) for c, x in enumerate(v) if x}
    if any(not (0 <= c < ambient_dim) for c in row):
        raise DimensionMismatchError(f"coordinate outside ambient dimension {ambient_dim}")
    return row


@dataclass(frozen=True)
class SubspaceBasis:
    ambient_dim: int
    rows: Tuple[SparseRow, ...] = ()

    # -- construction -----------------------------------------------------

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[VectorLike]) -> "SubspaceBasis":
        builder = EchelonBuilder()
        for v in vectors:
            builder.add(_as_row(v, ambient_dim))
        return cls._from_builder(ambient_dim, builder)

    @classmethod
    def _from_builder(cls, ambient_dim: int, builder: EchelonBuilder) -> "SubspaceBasis":
        return cls(ambient_dim, tuple(tuple(sorted(r.items())) for _, r in builder.rows()))

    @classmethod
    def zero(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(ambient_dim, tuple(((i, Fraction(1)),) for i in range(ambient_dim)))

    @classmethod
    def coordinate(cls, ambient_dim: int, cols: Iterable[int]) -> "SubspaceBasis":
        return cls(ambient_dim, tuple(((c, Fraction(1)),) for c in sorted(set(cols))))

    @classmethod
    def from_blocks(cls, ambient_dim: int,
                    pieces: Iterable[Tuple[Sequence[int], "SubspaceBasis"]]) -> "SubspaceBasis":
        """Assemble from bases living on disjoint coordinate sets.

        Each piece is (increasing index map local->global, local basis). Increasing
        maps preserve echelon shape, so sorting rows by pivot gives the canonical form.
        """
        rows: List[SparseRow] = []
        seen: set[int] = set()
        for index_map, local in pieces:
            block = set(index_map)
            if block & seen:
                raise DimensionMismatchError("blocks overlap")
            seen |= block
            for row in local.rows:
                rows.append(tuple((index_map[c], v) for c, v in row))
        rows.sort(key=lambda r: r[0][0])
        return cls(ambient_dim, tuple(rows))

    # -- accessors --------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return self.dim

    @property
    def pivots(self) -> List[int]:
        return [r[0][0] for r in self.rows]

    @property
    def vectors(self) -> List[Tuple[Fraction, ...]]:
        out = []
        for row in self.rows:
            v = [Fraction(0)] * self.ambient_dim
            for c, x in row:
                v[c] = x
            out.append(tuple(v))
        return out

    def row_dicts(self) -> List[RowDict]:
        return [dict(r) for r in self.rows]

    def as_matrix(self) -> RatMatrix:
        """Basis vectors as the rows of a dim x ambient matrix."""
        return RatMatrix.from_row_dicts(self.row_dicts(), self.ambient_dim)

    def contains(self, v: VectorLike) -> bool:
        return not self._builder().reduce(_as_row(v, self.ambient_dim))

    def coordinate_slice(self, cols: Iterable[int]) -> int:
        """dim of the intersection with span{e_c : c in cols}."""
        keep = set(cols)
        outside = [{c: x for c, x in r.items() if c not in keep} for r in self.row_dicts()]
        rank = len(EchelonBuilder().extend(outside))
        return self.dim - rank

    def _builder(self) -> EchelonBuilder:
        b = EchelonBuilder()
        for row in self.rows:
            b.add(dict(row))
        return b

    def _check_same_ambient(self, other: "SubspaceBasis") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")

    def to_dict(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "dim": self.dim,
            "vectors": [{str(c): str(x) for c, x in row} for row in self.rows],
        }


def subspace_sum(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    a._check_same_ambient(b)
    builder = a._builder()
    for row in b.rows:
        builder.add(dict(row))
    return SubspaceBasis._from_builder(a.ambient_dim, builder)


def intersect(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """a ∩ b: combinations of a's basis whose residual modulo b vanishes."""
    a._check_same_ambient(b)
    if a.dim == 0 or b.dim == 0:
        return SubspaceBasis.zero(a.ambient_dim)
    bb = b._builder()
    a_rows = a.row_dicts()
    residuals = [bb.reduce(r) for r in a_rows]
    # left kernel of the residual matrix: rows of R^T indexed by ambient coordinates
    relations = EchelonBuilder()
    cols: dict[int, RowDict] = {}
    for i, res in enumerate(residuals):
        for c, v in res.items():
            cols.setdefault(c, {})[i] = v
    for c in sorted(cols):
        relations.add(cols[c])
    pivots = set(relations.pivots)
    free = [i for i in range(len(a_rows)) if i not in pivots]
    rel_rows = dict(relations.rows())
    vectors: List[RowDict] = []
    for f in free:
        coeffs = {f: Fraction(1)}
        for p, row in rel_rows.items():
            if f in row:
                coeffs[p] = -row[f]
        acc: RowDict = {}
        for i, k in coeffs.items():
            for c, v in a_rows[i].items():
                acc[c] = acc.get(c, Fraction(0)) + k * v
        vectors.append({c: v for c, v in acc.items() if v})
    return SubspaceBasis.span(a.ambient_dim, vectors)
