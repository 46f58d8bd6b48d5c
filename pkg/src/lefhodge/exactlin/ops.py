"""
Rank, kernel, image, inverse and idempotency checks on RatMatrix.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from src.lefhodge.errors import InvalidInputError
from src.lefhodge.exactlin.echelon import EchelonBuilder, rref_rows
from src.lefhodge.exactlin.matrix import RatMatrix, RowDict
from src.lefhodge.exactlin.subspace import SubspaceBasis


def rref(m: RatMatrix) -> Tuple[RatMatrix, List[int]]:
    rows, pivots = rref_rows(m)
    return RatMatrix.from_row_dicts(rows, m.cols, m.threshold), pivots


def rank(m: RatMatrix) -> int:
    return len(rref_rows(m)[1])


def kernel_basis(m: RatMatrix) -> SubspaceBasis:
    rows, pivots = rref_rows(m)
    pivot_set = set(pivots)
    vectors: List[RowDict] = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v: RowDict = {f: Fraction(1)}
        for p, row in zip(pivots, rows):
            x = row.get(f)
            if x:
                v[p] = -x
        vectors.append(v)
    return SubspaceBasis.span(m.cols, vectors)


def image_basis(m: RatMatrix) -> SubspaceBasis:
    """Column space of m as a subspace of Q^rows."""
    return SubspaceBasis.span(m.rows, m.T.row_dicts())


def row_space(m: RatMatrix) -> SubspaceBasis:
    return SubspaceBasis.span(m.cols, m.row_dicts())


def inverse(m: RatMatrix) -> RatMatrix:
    if not m.is_square():
        raise InvalidInputError(f"inverse of non-square {m.rows}x{m.cols} matrix", rule="non-square")
    n = m.rows
    builder = EchelonBuilder()
    for i, row in enumerate(m.row_dicts()):
        aug = dict(row)
        aug[n + i] = Fraction(1)
        builder.add(aug)
    rows = builder.rows()
    if [p for p, _ in rows][:n] != list(range(n)) or len(rows) < n:
        raise InvalidInputError("matrix is singular", rule="singular-matrix")
    inv_rows = [{c - n: v for c, v in r.items() if c >= n} for _, r in rows[:n]]
    return RatMatrix.from_row_dicts(inv_rows, n, m.threshold)


def is_idempotent(m: RatMatrix) -> bool:
    if not m.is_square():
        raise InvalidInputError(f"idempotency of non-square {m.rows}x{m.cols} matrix", rule="non-square")
    return (m @ m) == m
