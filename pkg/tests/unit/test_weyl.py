"""Unit tests: contractions, insertions, traceless tensors, S_<λ>V and their Hodge profiles."""
import pytest


def _rep(kind, n):
    from src.lefhodge.weyl import StandardRep
    return StandardRep(kind, n)


def test_orthogonal_rank_one_rejected():
    from src.lefhodge.errors import OrthogonalRankError
    with pytest.raises(OrthogonalRankError) as exc:
        _rep("o", 1)
    assert exc.value.rule == "orthogonal-rank>1"


@pytest.mark.parametrize("kind,sign", [("sp", -1), ("o", 1)])
def test_contraction_signs_on_degree_two(kind, sign):
    from src.lefhodge.weyl import contraction_matrix
    rep = _rep(kind, 2)
    phi = contraction_matrix(rep, 2, (1, 2))
    assert phi.shape == (1, 16)
    assert phi[0, rep.word_index((0, 2))] == 1
    assert phi[0, rep.word_index((2, 0))] == sign
    assert phi[0, rep.word_index((0, 1))] == 0


def test_contraction_after_insertion_is_2n():
    from src.lefhodge.exactlin import RatMatrix
    from src.lefhodge.weyl import contraction_matrix, insertion_matrix
    for kind in ("sp", "o"):
        rep = _rep(kind, 2)
        prod = contraction_matrix(rep, 2, (1, 2)) @ insertion_matrix(rep, 2, (1, 2))
        assert prod == RatMatrix.from_rows([[4]])


def test_insertion_is_injective():
    from src.lefhodge.exactlin import rank
    from src.lefhodge.weyl import insertion_matrix
    rep = _rep("sp", 2)
    assert rank(insertion_matrix(rep, 3, (1, 3))) == 4


def test_bad_pair_rejected():
    from src.lefhodge.errors import InvalidInputError
    from src.lefhodge.weyl import contraction_matrix
    with pytest.raises(InvalidInputError):
        contraction_matrix(_rep("sp", 2), 2, (2, 1))
    with pytest.raises(InvalidInputError):
        contraction_matrix(_rep("sp", 2), 2, (1, 3))


@pytest.mark.parametrize("kind", ["sp", "o"])
def test_traceless_dimensions(kind):
    from src.lefhodge.weyl import traceless_subspace
    rep = _rep(kind, 2)
    assert traceless_subspace(rep, 1).dim == 4
    assert traceless_subspace(rep, 2).dim == 15


def test_traceless_kernels_differ_between_kinds():
    from src.lefhodge.weyl import traceless_subspace
    assert traceless_subspace(_rep("sp", 2), 2) != traceless_subspace(_rep("o", 2), 2)


def test_schur_images():
    from src.lefhodge.combinat import FilledTableau, Partition
    from src.lefhodge.weyl import schur_image
    rep = _rep("sp", 2)
    assert schur_image(rep, FilledTableau.canonical(Partition((2,)))).dim == 10
    assert schur_image(rep, FilledTableau.canonical(Partition((1, 1)))).dim == 6
    assert schur_image(rep, FilledTableau.canonical(Partition((1,)))).dim == 4


@pytest.mark.parametrize("kind,parts,expected", [
    ("sp", (1, 1, 1), 0),
    ("sp", (1, 1), 5),
    ("sp", (2,), 10),
    ("o", (1, 1), 6),
    ("o", (1, 1, 1), 4),
    ("o", (1, 1, 1, 1), 1),
    ("o", (2, 1, 1), 9),
    ("o", (2, 2, 1), 0),
])
def test_s_lambda_dimensions(kind, parts, expected):
    from src.lefhodge.combinat import Partition
    from src.lefhodge.weyl import s_lambda_space
    assert s_lambda_space(_rep(kind, 2), Partition(parts)).dim == expected


def test_threaded_construction_matches_serial():
    from src.lefhodge.combinat import Partition
    from src.lefhodge.weyl import s_lambda_space
    rep = _rep("sp", 2)
    lam = Partition((2, 1))
    assert s_lambda_space(rep, lam, threads=4) == s_lambda_space(rep, lam, threads=1)


def test_decomposition_audit_small_cases():
    from src.lefhodge.weyl import decomposition_audit
    for kind in ("sp", "o"):
        a2 = decomposition_audit(_rep(kind, 2), 2)
        assert (a2.traceless_dim, a2.insertion_dim, a2.passed) == (15, 1, True)
        a3 = decomposition_audit(_rep(kind, 2), 3)
        assert a3.traceless_dim + a3.insertion_dim == 64
        assert a3.passed


def test_hodge_profiles():
    from src.lefhodge.combinat import Partition
    from src.lefhodge.exactlin import SubspaceBasis
    from src.lefhodge.weyl import hodge_profile, s_lambda_space
    rep = _rep("sp", 2)
    assert hodge_profile(rep, SubspaceBasis.full(4)).as_dict() == {1: 2, -1: 2}
    assert hodge_profile(rep, s_lambda_space(rep, Partition((1, 1)))).as_dict() == {2: 1, 0: 3, -2: 1}
    assert hodge_profile(rep, s_lambda_space(rep, Partition((2,)))).as_dict() == {2: 3, 0: 4, -2: 3}


def test_tensor_guard():
    from src.lefhodge.config import EngineSettings
    from src.lefhodge.errors import ResourceGuardError
    from src.lefhodge.weyl import traceless_subspace
    with pytest.raises(ResourceGuardError):
        traceless_subspace(_rep("sp", 2), 4, settings=EngineSettings(max_tensor_dim=100))


def test_vanishing_criteria_match_construction_for_rank_two():
    from src.lefhodge.combinat import enumerate_partitions
    from src.lefhodge.weyl import predicted_vanishing, s_lambda_space
    for kind in ("sp", "o"):
        rep = _rep(kind, 2)
        for d in range(1, 5):
            for lam in enumerate_partitions(d):
                assert (s_lambda_space(rep, lam).dim == 0) == predicted_vanishing(kind, 2, lam), (kind, lam)


def test_configured_threshold_reaches_contraction_storage():
    from src.lefhodge.config import engine_settings
    from src.lefhodge.weyl import contraction_matrix, insertion_matrix
    rep = _rep("sp", 2)
    assert contraction_matrix(rep, 2, (1, 2)).is_sparse is True
    strict = engine_settings({"engine": {"sparse_density_threshold": 0.0}})
    phi = contraction_matrix(rep, 2, (1, 2), settings=strict)
    assert phi.is_sparse is False
    assert phi == contraction_matrix(rep, 2, (1, 2))
    assert insertion_matrix(rep, 2, (1, 2), settings=strict).threshold == 0.0


def test_schur_image_membership():
    from src.lefhodge.combinat import FilledTableau, Partition
    from src.lefhodge.weyl import schur_image
    rep = _rep("sp", 2)
    wedge2 = schur_image(rep, FilledTableau.canonical(Partition((1, 1))))
    skew = {rep.word_index((0, 1)): 1, rep.word_index((1, 0)): -1}
    assert wedge2.contains(skew)
    assert not wedge2.contains({rep.word_index((0, 0)): 1})
    sym2 = schur_image(rep, FilledTableau.canonical(Partition((2,))))
    assert not sym2.contains(skew)
