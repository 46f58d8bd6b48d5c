"""Unit tests: exact rational matrices, echelon forms, subspaces."""
from fractions import Fraction

import pytest


def test_identity_is_idempotent_and_full_rank():
    from src.lefhodge.exactlin import RatMatrix, is_idempotent, rank
    eye = RatMatrix.identity(5)
    assert is_idempotent(eye)
    assert rank(eye) == 5


def test_nilpotent_is_not_idempotent():
    from src.lefhodge.exactlin import RatMatrix, is_idempotent
    m = RatMatrix.from_rows([[0, 1], [0, 0]])
    assert not is_idempotent(m)


def test_non_square_idempotency_raises():
    from src.lefhodge.errors import InvalidInputError
    from src.lefhodge.exactlin import RatMatrix, is_idempotent
    with pytest.raises(InvalidInputError):
        is_idempotent(RatMatrix.zeros(2, 3))


def test_kernel_and_rank_of_rank_one_matrix():
    from src.lefhodge.exactlin import RatMatrix, kernel_basis, rank
    m = RatMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    assert rank(m) == 1
    k = kernel_basis(m)
    assert k.dim == 2
    for v in k.vectors:
        assert sum(a * b for a, b in zip(v, (1, 2, 3))) == 0


def test_dense_and_sparse_paths_agree():
    from src.lefhodge.exactlin import RatMatrix, rank, rref
    data = [[Fraction(1, 2), 0, 3, 0], [0, 0, 1, 1], [1, 0, 7, 1]]
    dense = RatMatrix.from_rows(data, threshold=0.0)
    sparse = RatMatrix.from_rows(data, threshold=1.0)
    assert not dense.is_sparse and sparse.is_sparse
    assert dense == sparse
    assert rank(dense) == rank(sparse) == 2
    assert rref(dense) == rref(sparse)
    assert (dense @ dense.T) == (sparse @ sparse.T)


def test_inverse_round_trip_and_singular():
    from src.lefhodge.errors import InvalidInputError
    from src.lefhodge.exactlin import RatMatrix, inverse
    m = RatMatrix.from_rows([[2, 1], [1, 1]])
    assert m @ inverse(m) == RatMatrix.identity(2)
    with pytest.raises(InvalidInputError):
        inverse(RatMatrix.from_rows([[1, 2], [2, 4]]))


def test_subspace_canonical_form_is_basis_independent():
    from src.lefhodge.exactlin import SubspaceBasis
    a = SubspaceBasis.span(3, [[1, 1, 0], [0, 1, 1]])
    b = SubspaceBasis.span(3, [[1, 2, 1], [1, 0, -1]])
    assert a == b
    assert a.dim == 2


def test_intersection_and_sum_dimensions():
    from src.lefhodge.exactlin import SubspaceBasis, intersect, subspace_sum
    a = SubspaceBasis.span(4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    b = SubspaceBasis.span(4, [[0, 1, 0, 0], [0, 0, 1, 0]])
    assert intersect(a, b) == SubspaceBasis.span(4, [[0, 1, 0, 0]])
    assert subspace_sum(a, b).dim == 3


def test_ambient_mismatch_raises():
    from src.lefhodge.errors import DimensionMismatchError
    from src.lefhodge.exactlin import SubspaceBasis, intersect
    with pytest.raises(DimensionMismatchError):
        intersect(SubspaceBasis.full(3), SubspaceBasis.full(4))


def test_coordinate_slice_counts_vectors_supported_on_columns():
    from src.lefhodge.exactlin import SubspaceBasis
    s = SubspaceBasis.span(4, [[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1]])
    assert s.coordinate_slice([0]) == 1
    assert s.coordinate_slice([1]) == 0
    assert s.coordinate_slice([1, 2, 3]) == 2


def test_from_blocks_matches_span():
    from src.lefhodge.exactlin import SubspaceBasis
    left = SubspaceBasis.span(2, [[1, 1]])
    right = SubspaceBasis.span(2, [[1, -1]])
    glued = SubspaceBasis.from_blocks(4, [([0, 2], left), ([1, 3], right)])
    assert glued == SubspaceBasis.span(4, [[1, 0, 1, 0], [0, 1, 0, -1]])


def test_density_threshold_decides_storage():
    from src.lefhodge.exactlin import RatMatrix, rref
    row = [[1, 1, 1, 0, 0, 0, 0, 0, 0, 0]]
    assert RatMatrix.from_rows(row).is_sparse is False
    loose = RatMatrix.from_rows(row, threshold=0.5)
    assert loose.is_sparse is True
    assert loose.threshold == 0.5
    assert loose.T.threshold == 0.5
    assert rref(loose)[0].threshold == 0.5
    assert (loose + loose).is_sparse is True


def test_subspace_membership():
    from src.lefhodge.exactlin import SubspaceBasis
    s = SubspaceBasis.span(3, [(1, 1, 0), (0, 1, 1)])
    assert s.contains((1, 2, 1))
    assert s.contains({0: 1, 2: -1})
    assert not s.contains((1, 0, 0))
