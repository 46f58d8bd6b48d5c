"""Performance tests: runtime ceilings for the exact acceptance grids on a laptop."""
import time
from math import comb


def test_weyl_oracle_grid_within_budget():
    """Sp/O with n in {2, 3}, every partition of d <= 4: tensor model vs Weyl dimension in < 120s."""
    from src.lefhodge.characters import dominant_weight_for, weyl_dim
    from src.lefhodge.combinat import enumerate_partitions
    from src.lefhodge.weyl import StandardRep, s_lambda_space
    start = time.perf_counter()
    for kind in ("sp", "o"):
        for n in (2, 3):
            rep = StandardRep(kind, n)
            for d in range(5):
                for lam in enumerate_partitions(d):
                    dw = dominant_weight_for(kind, n, lam)
                    expected = 0 if dw is None else weyl_dim(kind, n, dw)
                    assert s_lambda_space(rep, lam).dim == expected
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0, f"Weyl grid took {elapsed:.1f}s (max 120s)"


def test_coniveau_grid_within_budget():
    from src.lefhodge.hodge import primitive_filtration_table
    from src.lefhodge.lefschetz import AbelianDescriptor, AbelianFactor, coniveau_report
    start = time.perf_counter()
    for g in (1, 2, 3):
        desc = AbelianDescriptor.of(AbelianFactor("I", 1, 1, g))
        for k in range(2 * g + 1):
            assert coniveau_report(desc, 1, k).table.as_dict() == primitive_filtration_table(g, k)
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"Coniveau grid took {elapsed:.1f}s (max 60s)"


def test_sym_vanishing_grid_within_budget():
    from src.lefhodge.hodge import sym_vanishing_check
    start = time.perf_counter()
    for g in range(1, 5):
        for i in range(g + 1):
            assert sym_vanishing_check(g, i, comb(g, i) + 1)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"Vanishing grid took {elapsed:.1f}s (max 10s)"


def test_molien_within_budget():
    from src.lefhodge.hodge import molien_holomorphic_invariants
    start = time.perf_counter()
    for n in range(1, 5):
        assert molien_holomorphic_invariants(2, n).odd_coefficients_vanish()
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"Molien series took {elapsed:.1f}s (max 30s)"


def test_kleiman_family_within_budget():
    from src.lefhodge.hodge import kleiman_projectors
    start = time.perf_counter()
    for g in (1, 2, 3):
        assert all(kleiman_projectors(g).audit().values())
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"Projector families took {elapsed:.1f}s (max 60s)"
