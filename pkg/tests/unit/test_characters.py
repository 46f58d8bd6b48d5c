"""Unit tests: weight characters, Weyl dimensions, Freudenthal multiplicities, peeling."""
import pytest


def test_std_characters():
    from src.lefhodge.characters import std_character
    assert std_character("sp", 2).total == 4
    assert std_character("sp", 3).total == 6
    assert std_character("o", 2).total == 4


def test_std_orthogonal_rank_one_rejected():
    from src.lefhodge.characters import std_character
    from src.lefhodge.errors import OrthogonalRankError
    with pytest.raises(OrthogonalRankError):
        std_character("o", 1)


def test_wedge_and_sym_of_std():
    from src.lefhodge.characters import std_character, sym, wedge
    v = std_character("sp", 2)
    w2 = wedge(v, 2).as_dict()
    assert w2 == {(1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1, (0, 0): 2}
    s2 = sym(v, 2)
    assert s2.total == 10
    assert s2[(2, 0)] == 1 and s2[(0, -2)] == 1


def test_tensor_with_trivial_is_identity():
    from src.lefhodge.characters import WeightCharacter, std_character, tensor
    v = std_character("sp", 3)
    assert tensor(v, WeightCharacter.trivial(3)) == v


def test_tensor_rank_mismatch():
    from src.lefhodge.characters import std_character, tensor
    from src.lefhodge.errors import DimensionMismatchError
    with pytest.raises(DimensionMismatchError):
        tensor(std_character("sp", 2), std_character("sp", 3))


@pytest.mark.parametrize("kind,coords,paired,expected", [
    ("sp", (1, 1), False, 5),
    ("sp", (2, 0), False, 10),
    ("o", (1, 1), True, 6),
    ("o", (2, 0), False, 9),
    ("sp", (1, 1, 1), False, 14),
])
def test_weyl_dim(kind, coords, paired, expected):
    from src.lefhodge.characters import DominantWeight, weyl_dim
    assert weyl_dim(kind, len(coords), DominantWeight(coords, paired)) == expected


def test_irr_character_examples():
    from src.lefhodge.characters import DominantWeight, irr_character, std_character
    assert irr_character("sp", 2, DominantWeight((1, 1))).as_dict() == {
        (1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1, (0, 0): 1}
    assert irr_character("sp", 2, DominantWeight((1, 0))) == std_character("sp", 2)
    assert irr_character("o", 3, DominantWeight((0, 0, 0))).as_dict() == {(0, 0, 0): 1}


def test_decompose_examples():
    from src.lefhodge.characters import DominantWeight, decompose, std_character, tensor, wedge
    v = std_character("sp", 2)
    assert decompose(wedge(v, 2), "sp", 2) == {DominantWeight((1, 1)): 1, DominantWeight((0, 0)): 1}
    assert decompose(tensor(v, v), "sp", 2) == {
        DominantWeight((2, 0)): 1, DominantWeight((1, 1)): 1, DominantWeight((0, 0)): 1}


def test_decompose_orthogonal_pairs():
    from src.lefhodge.characters import DominantWeight, decompose, std_character, wedge
    v = std_character("o", 2)
    assert decompose(wedge(v, 2), "o", 2) == {DominantWeight((1, 1), paired=True): 1}
    assert decompose(wedge(v, 3), "o", 2) == {DominantWeight((1, 0)): 1}


def test_decompose_rejects_non_characters():
    from src.lefhodge.characters import WeightCharacter, decompose
    from src.lefhodge.errors import NonCharacterError
    with pytest.raises(NonCharacterError):
        decompose(WeightCharacter.from_mapping(2, {(1, 0): 1}), "sp", 2)
    with pytest.raises(NonCharacterError):
        decompose(WeightCharacter.trivial(2).scale(-1), "sp", 2)


def test_hodge_specialize_examples():
    from src.lefhodge.characters import DominantWeight, hodge_specialize, irr_character, std_character
    assert hodge_specialize(std_character("sp", 2)).as_dict() == {1: 2, -1: 2}
    assert hodge_specialize(irr_character("sp", 2, DominantWeight((1, 1)))).as_dict() == {2: 1, 0: 3, -2: 1}
    assert hodge_specialize(irr_character("sp", 2, DominantWeight((2, 0)))).as_dict() == {2: 3, 0: 4, -2: 3}


def test_level_law_and_weyl_invariance():
    from src.lefhodge.characters import (dominant_weight_for, hodge_specialize, irr_character,
                                         weyl_dim)
    from src.lefhodge.combinat import enumerate_partitions
    for kind, ranks in (("sp", (1, 2, 3)), ("o", (2, 3))):
        for n in ranks:
            for d in range(0, 5):
                for lam in enumerate_partitions(d):
                    dw = dominant_weight_for(kind, n, lam)
                    if dw is None:
                        continue
                    chi = irr_character(kind, n, dw)
                    assert chi.total == weyl_dim(kind, n, dw)
                    assert chi.is_weyl_invariant(kind)
                    prof = hodge_specialize(chi)
                    assert prof.is_palindromic()
                    assert prof.max_support == dw.level


def test_decompose_partitions_mass_of_wedge_powers():
    from src.lefhodge.characters import decompose, std_character, weyl_dim, wedge
    for kind, n in (("sp", 2), ("sp", 3), ("o", 2), ("o", 3)):
        v = std_character(kind, n)
        doubled = v + v
        for k in range(0, 4 * n + 1):
            x = wedge(doubled, k)
            parts = decompose(x, kind, n)
            assert sum(c * weyl_dim(kind, n, lam) for lam, c in parts.items()) == x.total


def test_product_character_of_two_factors():
    from src.lefhodge.characters import product_character, std_character
    a = std_character("sp", 2)
    b = std_character("sp", 1)
    prod = product_character(a, b)
    assert prod.rank == 3
    assert prod.total == a.total * b.total == 8
    assert prod[(1, 0, 1)] == 1
    assert prod[(0, -1, -1)] == 1


def test_direct_sum_adds_multiplicities():
    from src.lefhodge.characters import WeightCharacter, direct_sum, std_character
    v = std_character("sp", 2)
    s = direct_sum(v, WeightCharacter.trivial(2))
    assert s.total == 5
    assert s[(0, 0)] == 1
    assert direct_sum(v, v)[(1, 0)] == 2
