"""
Exterior-algebra model of H^*(A) with polarization L = Σ e_i ∧ e_-i.

Builds the projectors p^{k,r} onto L^r H^{k-2r}_prim, checks hard Lefschetz,
and provides the pairings used to form orthogonal projectors onto
sub-Hodge structures. Matrices act on column vectors indexed by the monomial
basis (subsets of generators ordered by degree, then lexicographically).
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from src.lefhodge.config import DEFAULT_SETTINGS, EngineSettings
from src.lefhodge.errors import DegeneratePairingError, InvalidInputError, guard
from src.lefhodge.exactlin.matrix import RatMatrix, RowDict
from src.lefhodge.exactlin.ops import inverse, is_idempotent, kernel_basis, rank
from src.lefhodge.exactlin.subspace import SubspaceBasis

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


class ExteriorModel:
    """∧^* of a 2g-dimensional space; generators 0..g-1 are e_i, g..2g-1 are e_-i."""

    def __init__(self, g: int) -> None:
        if g < 0:
            raise InvalidInputError(f"dimension must be nonnegative, got {g}", rule="genus")
        self.g = g
        self.rank = 2 * g
        self.basis: List[Monomial] = [
            m for k in range(self.rank + 1) for m in itertools.combinations(range(self.rank), k)]
        self.index: Dict[Monomial, int] = {m: i for i, m in enumerate(self.basis)}
        self.size = len(self.basis)

    def degree_indices(self, k: int) -> List[int]:
        return [i for i, m in enumerate(self.basis) if len(m) == k]

    @staticmethod
    def wedge_monomials(a: Monomial, b: Monomial) -> Tuple[int, Optional[Monomial]]:
        """(sign, a∧b as a sorted monomial) or (0, None) when they share a generator."""
        if set(a) & set(b):
            return 0, None
        inversions = sum(1 for u in a for v in b if u > v)
        return (-1 if inversions % 2 else 1), tuple(sorted(a + b))

    def wedge(self, u: RowDict, v: RowDict) -> RowDict:
        out: RowDict = {}
        for i, a in u.items():
            for j, b in v.items():
                s, m = self.wedge_monomials(self.basis[i], self.basis[j])
                if s:
                    k = self.index[m]
                    out[k] = out.get(k, Fraction(0)) + s * a * b
        return {k: c for k, c in out.items() if c}

    def polarization(self) -> RowDict:
        return {self.index[(i, i + self.g)]: Fraction(1) for i in range(self.g)}

    def multiplication(self, element: RowDict) -> RatMatrix:
        """Matrix of x ↦ element ∧ x."""
        entries: Dict[Tuple[int, int], Fraction] = {}
        for col in range(self.size):
            for row, c in self.wedge(element, {col: Fraction(1)}).items():
                entries[(row, col)] = c
        return RatMatrix.from_entries(self.size, self.size, entries)


@lru_cache(maxsize=8)
def exterior_model(g: int) -> ExteriorModel:
    return ExteriorModel(g)


@lru_cache(maxsize=8)
def lefschetz_operator(g: int) -> RatMatrix:
    model = exterior_model(g)
    return model.multiplication(model.polarization())


def _matrix_power(m: RatMatrix, r: int) -> RatMatrix:
    out = RatMatrix.identity(m.rows)
    for _ in range(r):
        out = m @ out
    return out


def _columns_matrix(size: int, columns: Sequence[RowDict]) -> RatMatrix:
    return RatMatrix.from_row_dicts(list(columns), size).T


@dataclass(frozen=True)
class ProjectorFamily:
    g: int
    matrices: Dict[Tuple[int, int], RatMatrix] = field(default_factory=dict)
    hard_lefschetz: Dict[int, bool] = field(default_factory=dict)

    def projector(self, k: int, r: int) -> RatMatrix:
        size = 2 ** (2 * self.g)
        return self.matrices.get((k, r), RatMatrix.zeros(size, size))

    def degree_projector(self, k: int) -> RatMatrix:
        size = 2 ** (2 * self.g)
        out = RatMatrix.zeros(size, size)
        for (kk, _), m in sorted(self.matrices.items()):
            if kk == k:
                out = out + m
        return out

    def ranks(self) -> Dict[Tuple[int, int], int]:
        return {key: rank(m) for key, m in sorted(self.matrices.items())}

    def audit(self) -> Dict[str, bool]:
        """Idempotency, pairwise orthogonality, completeness and hard Lefschetz, as flags."""
        size = 2 ** (2 * self.g)
        zero = RatMatrix.zeros(size, size)
        keys = sorted(self.matrices)
        total = zero
        for key in keys:
            total = total + self.matrices[key]
        return {
            "idempotent": all(is_idempotent(self.matrices[key]) for key in keys),
            "orthogonal": all(self.matrices[a] @ self.matrices[b] == zero for a in keys for b in keys if a != b),
            "complete": total == RatMatrix.identity(size),
            "hard_lefschetz": all(self.hard_lefschetz.values()),
        }

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "ranks": {f"{k},{r}": v for (k, r), v in self.ranks().items()},
            "hard_lefschetz": {str(i): ok for i, ok in sorted(self.hard_lefschetz.items())},
        }


def primitive_subspace(g: int, j: int) -> SubspaceBasis:
    """P^j = ker L^{g-j+1} ∩ H^j, in global coordinates."""
    model = exterior_model(g)
    cols = model.degree_indices(j)
    power = _matrix_power(lefschetz_operator(g), g - j + 1)
    local = kernel_basis(power.submatrix(list(range(model.size)), cols))
    return SubspaceBasis.from_blocks(model.size, [(cols, local)])


def kleiman_projectors(g: int, *, settings: EngineSettings = DEFAULT_SETTINGS) -> ProjectorFamily:
    guard(g, settings.max_projector_genus, "projector genus g")
    model = exterior_model(g)
    lef = lefschetz_operator(g)
    threshold = settings.sparse_density_threshold
    powers = [RatMatrix.identity(model.size, threshold)]
    for _ in range(2 * g + 1):
        powers.append(powers[-1] @ lef)
    family = ProjectorFamily(g)

    for i in range(g + 1):
        src = model.degree_indices(i)
        dst = model.degree_indices(2 * g - i)
        block = powers[g - i].submatrix(dst, src)
        family.hard_lefschetz[i] = rank(block) == len(src) == len(dst)
        if not family.hard_lefschetz[i]:
            logger.error("hard Lefschetz fails in degree %d for g=%d", i, g)

    primitives = {j: primitive_subspace(g, j) for j in range(g + 1)}
    for k in range(2 * g + 1):
        idx = model.degree_indices(k)
        pieces: List[Tuple[int, List[RowDict]]] = []
        for r in range(0, k // 2 + 1):
            j = k - 2 * r
            if j > g or r > g - j or primitives[j].dim == 0:
                continue
            images = [_apply(powers[r], v) for v in primitives[j].row_dicts()]
            pieces.append((r, images))
        local_pos = {c: a for a, c in enumerate(idx)}
        columns = [{local_pos[c]: x for c, x in v.items()} for _, vs in pieces for v in vs]
        basis = _columns_matrix(len(idx), columns)
        if basis.rows != basis.cols:
            raise ArithmeticError(f"degree {k}: Lefschetz pieces span {basis.cols} of {basis.rows} dims")
        basis_inv = inverse(basis)
        offset = 0
        for r, vs in pieces:
            sel = {(offset + a, offset + a): Fraction(1) for a in range(len(vs))}
            offset += len(vs)
            e = RatMatrix.from_entries(basis.cols, basis.cols, sel, threshold)
            local = basis @ e @ basis_inv
            entries = {(idx[a], idx[b]): v for (a, b), v in local.entries()}
            family.matrices[(k, r)] = RatMatrix.from_entries(model.size, model.size, entries, threshold)
    logger.info("kleiman projectors g=%d: %d nonzero projectors", g, len(family.matrices))
    return family


def _apply(m: RatMatrix, v: RowDict) -> RowDict:
    out: RowDict = {}
    for r, row in enumerate(m.row_dicts()):
        s = sum((row[c] * x for c, x in v.items() if c in row), Fraction(0))
        if s:
            out[r] = s
    return out


def intersection_pairing(g: int) -> RatMatrix:
    """⟨x, y⟩ = coefficient of the top monomial in x ∧ y."""
    model = exterior_model(g)
    entries: Dict[Tuple[int, int], Fraction] = {}
    for a, ma in enumerate(model.basis):
        comp = tuple(c for c in range(model.rank) if c not in ma)
        b = model.index[comp]
        s, _ = model.wedge_monomials(ma, comp)
        entries[(a, b)] = Fraction(s)
    return RatMatrix.from_entries(model.size, model.size, entries)


def orthogonal_projector(s: SubspaceBasis, pairing: RatMatrix) -> RatMatrix:
    """π = Sᵀ (S P Sᵀ)⁻¹ S P: identity on s, zero on its pairing-orthogonal complement."""
    if pairing.shape != (s.ambient_dim, s.ambient_dim):
        raise InvalidInputError(f"pairing of shape {pairing.shape} on ambient {s.ambient_dim}",
                                rule="ambient-dimension-mismatch")
    sm = s.as_matrix()
    gram = sm @ pairing @ sm.T
    if rank(gram) < s.dim:
        raise DegeneratePairingError("pairing restricted to the subspace is degenerate", rule="degenerate-pairing")
    if s.dim == 0:
        return RatMatrix.zeros(s.ambient_dim, s.ambient_dim)
    return sm.T @ inverse(gram) @ sm @ pairing


def chow_kunneth_projector(g: int, k: int, family: Optional[ProjectorFamily] = None) -> RatMatrix:
    """π^k = Σ_r p^{k,r}."""
    family = family or kleiman_projectors(g)
    return family.degree_projector(k)


def lefschetz_involution(g: int, k: int, family: Optional[ProjectorFamily] = None) -> RatMatrix:
    """s_k = Σ_r (-1)^r p^{k,r}."""
    family = family or kleiman_projectors(g)
    size = 2 ** (2 * g)
    out = RatMatrix.zeros(size, size)
    for (kk, r), m in sorted(family.matrices.items()):
        if kk == k:
            out = out + (m if r % 2 == 0 else -m)
    return out


def hodge_riemann_pairing(g: int, k: int, family: Optional[ProjectorFamily] = None) -> RatMatrix:
    """Q_k(x, y) = ⟨L^{g-k} x, s_k y⟩ on H^k, zero off the degree-k block."""
    if not (0 <= k <= g):
        raise InvalidInputError(f"Hodge-Riemann pairing needs 0 <= k <= g, got k={k}", rule="degree-range")
    power = _matrix_power(lefschetz_operator(g), g - k)
    inv = lefschetz_involution(g, k, family)
    return power.T @ intersection_pairing(g) @ inv
