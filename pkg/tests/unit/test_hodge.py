"""Unit tests: bigraded tables, plethysm, vanishing checks, primitive filtration, Kleiman projectors, Molien series."""
from fractions import Fraction
from math import comb

import pytest


def _table(m):
    from src.lefhodge.hodge import BigradedDims
    return BigradedDims.from_mapping(m)


def test_abelian_hodge_small_cases():
    from src.lefhodge.hodge import abelian_hodge
    assert abelian_hodge(0).as_dict() == {(0, 0): 1}
    assert abelian_hodge(1).as_dict() == {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
    a2 = abelian_hodge(2)
    assert (a2[(2, 0)], a2[(1, 1)], a2[(2, 1)], a2[(2, 2)]) == (1, 4, 2, 1)
    assert a2.total == 16
    assert a2.is_hodge_symmetric()
    assert [a2.betti(k) for k in range(5)] == [1, 4, 6, 4, 1]


def test_hodge_diamond_rows():
    from src.lefhodge.hodge import abelian_hodge
    assert abelian_hodge(1).hodge_diamond() == [[1], [1, 1], [0, 1, 0]]


def test_negative_bidegree_rejected():
    from src.lefhodge.errors import InvalidInputError
    with pytest.raises(InvalidInputError):
        _table({(-1, 0): 1})


def test_kunneth_of_curves_is_surface_table():
    from src.lefhodge.hodge import BigradedDims, abelian_hodge, kunneth, kunneth_power
    e = abelian_hodge(1)
    assert kunneth(e, e) == abelian_hodge(2)
    assert kunneth(BigradedDims.point(), abelian_hodge(2)) == abelian_hodge(2)
    assert kunneth_power(e, 3) == abelian_hodge(3)
    a, b = _table({(1, 0): 2}), _table({(0, 1): 3, (1, 1): 1})
    assert kunneth(a, b) == kunneth(b, a)


def test_super_operations_on_surface_pieces():
    from src.lefhodge.hodge import abelian_hodge, super_ext, super_sym
    h2 = abelian_hodge(2).degree_piece(2)
    ext2 = super_ext(h2, 2)
    assert ext2.row(0) == {}
    assert ext2.total == comb(6, 2)
    assert super_sym(h2, 2).total == comb(7, 2)
    h3 = abelian_hodge(2).degree_piece(3)
    sym2 = super_sym(h3, 2)
    assert sym2.row(0) == {}
    assert sym2.total == comb(4, 2)
    assert super_ext(h3, 2).total == comb(5, 2)
    assert super_sym(h2, 1) == h2
    assert super_ext(h3, 1) == h3


@pytest.mark.parametrize("n", [2, 3, 4])
def test_super_power_masses_follow_parity(n):
    from src.lefhodge.hodge import abelian_hodge, super_ext, super_sym
    for k in range(0, 7):
        piece = abelian_hodge(3).degree_piece(k)
        dim = piece.total
        sym_mass, ext_mass = comb(dim + n - 1, n), comb(dim, n)
        if k % 2:
            sym_mass, ext_mass = ext_mass, sym_mass
        assert super_sym(piece, n).total == sym_mass
        assert super_ext(piece, n).total == ext_mass


def test_super_power_rejects_mixed_degrees():
    from src.lefhodge.errors import InvalidInputError
    from src.lefhodge.hodge import abelian_hodge, super_sym
    with pytest.raises(InvalidInputError) as exc:
        super_sym(abelian_hodge(1), 2)
    assert exc.value.rule == "mixed-degree"


def test_sym_vanishing_examples():
    from src.lefhodge.hodge import sym_vanishing_check
    assert sym_vanishing_check(2, 2, 2) is True
    assert sym_vanishing_check(2, 2, 1) is False
    assert sym_vanishing_check(3, 1, 4) is True


def test_sym_vanishing_at_threshold_for_small_genus():
    from src.lefhodge.hodge import sym_vanishing_check, vanishing_threshold
    for g in range(1, 5):
        for i in range(g + 1):
            assert vanishing_threshold(g, i) == comb(g, i)
            assert sym_vanishing_check(g, i, comb(g, i) + 1)


def test_first_vanishing_power_reports_earlier_vanishing():
    from src.lefhodge.hodge import first_vanishing_power
    assert first_vanishing_power(2, 2, 5) == 2
    assert first_vanishing_power(3, 1, 5) == 1


def test_depth_variant_of_vanishing():
    from src.lefhodge.hodge import first_vanishing_power, sym_vanishing_check, vanishing_threshold
    assert vanishing_threshold(2, 2, depth=1) == 5
    assert vanishing_threshold(3, 2, depth=1) == 12
    assert sym_vanishing_check(2, 2, 2, depth=1) is False
    assert sym_vanishing_check(2, 2, 6, depth=1) is True
    assert first_vanishing_power(2, 2, 10, depth=1) == 3


def test_sym_vanishing_range_errors():
    from src.lefhodge.errors import InvalidInputError
    from src.lefhodge.hodge import sym_vanishing_check
    with pytest.raises(InvalidInputError) as exc:
        sym_vanishing_check(2, 3, 2)
    assert exc.value.rule == "vanishing-range"
    with pytest.raises(InvalidInputError):
        sym_vanishing_check(2, 1, 0)


def test_level_and_coniveau():
    from src.lefhodge.hodge import BigradedDims, abelian_hodge, coniveau_in_degree, format_level, level
    h2 = abelian_hodge(2).degree_piece(2)
    assert level(h2) == 2
    assert coniveau_in_degree(h2, 2) == 0
    assert level(_table({(1, 1): 4})) == 0
    assert coniveau_in_degree(_table({(1, 1): 4}), 2) == 1
    zero = BigradedDims()
    assert level(zero) is None
    assert format_level(level(zero)) == "-inf"
    assert coniveau_in_degree(zero, 3) == 3


def test_coniveau_degree_mismatch():
    from src.lefhodge.errors import InvalidInputError
    from src.lefhodge.hodge import coniveau_in_degree
    with pytest.raises(InvalidInputError):
        coniveau_in_degree(_table({(1, 1): 1}), 3)


def test_skew_vanishing():
    from src.lefhodge.errors import InvalidInputError
    from src.lefhodge.hodge import skew_vanishing
    transcendental = _table({(2, 0): 1, (1, 1): 3, (0, 2): 1})
    assert skew_vanishing(transcendental, 2) is True
    assert skew_vanishing(transcendental, 1) is False
    assert skew_vanishing(_table({(2, 0): 2, (0, 2): 2}), 2) is False
    assert skew_vanishing(_table({(1, 1): 5}), 1) is True
    with pytest.raises(InvalidInputError) as exc:
        skew_vanishing(_table({(2, 1): 1}), 2)
    assert exc.value.rule == "degree-parity"


def test_primitive_filtration_dims():
    from src.lefhodge.hodge import primitive_dim, primitive_filtration_dims, primitive_filtration_table
    assert primitive_filtration_dims(2, 2, 1) == 1
    assert primitive_filtration_dims(2, 3, 1) == 4
    assert primitive_filtration_dims(2, 2, 0) == 6
    assert primitive_filtration_dims(2, 4, 0) == 1
    assert [primitive_dim(2, j) for j in range(3)] == [1, 4, 5]
    for g in range(1, 4):
        for k in range(2 * g + 1):
            table = primitive_filtration_table(g, k)
            assert table[0] == comb(2 * g, k)
            values = [table[n] for n in sorted(table)]
            assert values == sorted(values, reverse=True)


def test_primitive_filtration_range_error():
    from src.lefhodge.errors import InvalidInputError
    from src.lefhodge.hodge import primitive_filtration_dims
    with pytest.raises(InvalidInputError):
        primitive_filtration_dims(2, 5, 0)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_kleiman_family_is_complete_orthogonal_idempotent(g):
    from src.lefhodge.exactlin import RatMatrix, is_idempotent, rank
    from src.lefhodge.hodge import kleiman_projectors, primitive_dim
    family = kleiman_projectors(g)
    size = 2 ** (2 * g)
    zero = RatMatrix.zeros(size, size)
    total = zero
    keys = sorted(family.matrices)
    for key in keys:
        p = family.matrices[key]
        assert is_idempotent(p)
        k, r = key
        assert rank(p) == primitive_dim(g, k - 2 * r)
        total = total + p
    assert total == RatMatrix.identity(size)
    for a in keys:
        for b in keys:
            if a != b:
                assert family.matrices[a] @ family.matrices[b] == zero
    assert all(family.hard_lefschetz.values())
    assert sorted(family.hard_lefschetz) == list(range(g + 1))


def test_kleiman_ranks_for_small_genus():
    from src.lefhodge.hodge import kleiman_projectors
    assert kleiman_projectors(1).ranks() == {(0, 0): 1, (1, 0): 2, (2, 1): 1}
    ranks = kleiman_projectors(2).ranks()
    assert ranks[(2, 0)] == 5
    assert ranks[(2, 1)] == 1
    assert ranks[(4, 2)] == 1
    assert (4, 1) not in ranks


def test_kleiman_genus_guard():
    from src.lefhodge.config import EngineSettings
    from src.lefhodge.errors import ResourceGuardError
    from src.lefhodge.hodge import kleiman_projectors
    with pytest.raises(ResourceGuardError):
        kleiman_projectors(3, settings=EngineSettings(max_projector_genus=2))


def test_chow_kunneth_projector_is_degree_block():
    from src.lefhodge.exactlin import RatMatrix
    from src.lefhodge.hodge import chow_kunneth_projector
    from src.lefhodge.hodge.kleiman import exterior_model
    model = exterior_model(2)
    for k in range(5):
        expected = RatMatrix.from_entries(model.size, model.size,
                                          {(i, i): Fraction(1) for i in model.degree_indices(k)})
        assert chow_kunneth_projector(2, k) == expected


def test_lefschetz_involution_squares_to_degree_projector():
    from src.lefhodge.hodge import chow_kunneth_projector, kleiman_projectors, lefschetz_involution
    family = kleiman_projectors(2)
    for k in range(5):
        s = lefschetz_involution(2, k, family)
        assert s @ s == chow_kunneth_projector(2, k, family)


def test_orthogonal_projector_small_examples():
    from src.lefhodge.exactlin import RatMatrix, SubspaceBasis
    from src.lefhodge.hodge import orthogonal_projector
    dot = RatMatrix.identity(2)
    assert orthogonal_projector(SubspaceBasis.full(2), dot) == RatMatrix.identity(2)
    line = SubspaceBasis.span(2, [[1, 0]])
    assert orthogonal_projector(line, dot) == RatMatrix.from_rows([[1, 0], [0, 0]])
    skewed = RatMatrix.from_rows([[1, 1], [1, 2]])
    p = orthogonal_projector(line, skewed)
    assert p @ p == p
    assert p == RatMatrix.from_rows([[1, 1], [0, 0]])


def test_orthogonal_projector_errors():
    from src.lefhodge.errors import DegeneratePairingError, InvalidInputError
    from src.lefhodge.exactlin import RatMatrix, SubspaceBasis
    from src.lefhodge.hodge import orthogonal_projector
    line = SubspaceBasis.span(2, [[1, 0]])
    with pytest.raises(DegeneratePairingError):
        orthogonal_projector(line, RatMatrix.from_rows([[0, 1], [1, 0]]))
    with pytest.raises(InvalidInputError) as exc:
        orthogonal_projector(line, RatMatrix.identity(3))
    assert exc.value.rule == "ambient-dimension-mismatch"


def test_orthogonal_projector_onto_primitive_h2_matches_kleiman():
    from src.lefhodge.hodge import intersection_pairing, kleiman_projectors, orthogonal_projector, primitive_subspace
    prim = primitive_subspace(2, 2)
    assert prim.dim == 5
    p = orthogonal_projector(prim, intersection_pairing(2))
    assert p == kleiman_projectors(2).projector(2, 0)


@pytest.mark.parametrize("g,k", [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)])
def test_hodge_riemann_pairing_parity_and_rank(g, k):
    from src.lefhodge.exactlin import rank
    from src.lefhodge.hodge import hodge_riemann_pairing
    q = hodge_riemann_pairing(g, k)
    assert rank(q) == comb(2 * g, k)
    assert q.T == (q if k % 2 == 0 else -q)


def test_hodge_riemann_pairing_range():
    from src.lefhodge.errors import InvalidInputError
    from src.lefhodge.hodge import hodge_riemann_pairing
    with pytest.raises(InvalidInputError):
        hodge_riemann_pairing(2, 3)


def test_beauville_weights():
    from src.lefhodge.errors import InvalidInputError
    from src.lefhodge.hodge import beauville_weight
    w = beauville_weight(2, 0, 2)
    assert (w.pullback_exp, w.pushforward_exp) == (2, 2)
    assert beauville_weight(1, 0, 2).pullback_exp == 1
    w = beauville_weight(2, 1, 2)
    assert (w.motive_degree, w.pullback_exp, w.pushforward_exp) == (0, 0, 4)
    assert w.to_dict()["i"] == 2
    with pytest.raises(InvalidInputError):
        beauville_weight(1, 0, -1)


def test_molien_series_examples():
    from src.lefhodge.hodge import molien_holomorphic_invariants
    kummer = molien_holomorphic_invariants(2, 1)
    assert kummer.coeffs == (1, 0, 1)
    assert str(kummer) == "1 + t^2"
    assert molien_holomorphic_invariants(2, 2).coeffs == (1, 0, 1, 0, 1)
    curve = molien_holomorphic_invariants(1, 1)
    assert curve.coefficient(0) == 1
    assert curve.coefficient(1) == 0


def test_molien_odd_coefficients_vanish_for_surfaces():
    from src.lefhodge.hodge import molien_holomorphic_invariants
    for n in range(1, 5):
        series = molien_holomorphic_invariants(2, n)
        assert series.odd_coefficients_vanish()
        assert series.coefficient(0) == 1


def test_molien_guard():
    from src.lefhodge.config import EngineSettings
    from src.lefhodge.errors import ResourceGuardError
    from src.lefhodge.hodge import molien_holomorphic_invariants
    with pytest.raises(ResourceGuardError):
        molien_holomorphic_invariants(2, 5, settings=EngineSettings(max_molien_group_order=100))


def test_hard_lefschetz_ranks_genus_four():
    from src.lefhodge.exactlin import RatMatrix, kernel_basis, rank
    from src.lefhodge.hodge import primitive_dim, primitive_filtration_dims
    from src.lefhodge.hodge.kleiman import exterior_model, lefschetz_operator
    g = 4
    model = exterior_model(g)
    assert model.size == 256
    lef = lefschetz_operator(g)
    powers = [RatMatrix.identity(model.size)]
    for _ in range(g + 1):
        powers.append(powers[-1] @ lef)
    for i in range(g + 1):
        src = model.degree_indices(i)
        dst = model.degree_indices(2 * g - i)
        assert len(src) == len(dst) == comb(2 * g, i)
        assert rank(powers[g - i].submatrix(dst, src)) == comb(2 * g, i)
    everything = list(range(model.size))
    for j in range(g + 1):
        src = model.degree_indices(j)
        prim = kernel_basis(powers[g - j + 1].submatrix(everything, src)).dim
        assert prim == primitive_dim(g, j) == comb(2 * g, j) - (comb(2 * g, j - 2) if j >= 2 else 0)
    for k in range(2 * g + 1):
        for n in range(k // 2 + 1):
            expected = sum(primitive_dim(g, k - 2 * r) for r in range(n, k // 2 + 1)
                           if k - 2 * r <= g and r <= g - (k - 2 * r))
            assert primitive_filtration_dims(g, k, n) == expected


def test_projector_family_is_frozen():
    import dataclasses
    from src.lefhodge.hodge import kleiman_projectors
    family = kleiman_projectors(1)
    with pytest.raises(dataclasses.FrozenInstanceError):
        family.g = 2
