"""
Weyl's construction in explicit tensor space.

V^<d> is the intersection of the kernels of all contractions, S_λV the image of
the Young projector of the canonical tableau, and S_<λ>V their intersection.
Every map here commutes with the diagonal torus, so each space is computed
one torus-weight block at a time and the blocks are glued back together.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from src.lefhodge.combinat.group_algebra import GroupAlgebraElement, young_projector
from src.lefhodge.combinat.partitions import Partition, column_data
from src.lefhodge.combinat.tableaux import FilledTableau
from src.lefhodge.config import DEFAULT_SETTINGS, EngineSettings
from src.lefhodge.data.schema import FormKind, HodgeProfile
from src.lefhodge.errors import DimensionMismatchError, InvalidInputError, guard
from src.lefhodge.exactlin.matrix import RatMatrix
from src.lefhodge.exactlin.ops import kernel_basis
from src.lefhodge.exactlin.subspace import SubspaceBasis, intersect
from src.lefhodge.weyl.standard_rep import StandardRep, Word
from src.lefhodge.weyl.tensors import (
    contraction_rows_local,
    insertion_images_local,
    projector_images_local,
)

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]
Block = Tuple[Tuple[int, ...], Tuple[Word, ...]]


def _check_size(rep: StandardRep, d: int, settings: EngineSettings) -> None:
    if d < 0:
        raise InvalidInputError(f"tensor degree must be nonnegative, got {d}", rule="degree")
    guard(rep.tensor_dim(d), settings.max_tensor_dim, f"(2n)^d for {rep.name}, d={d}")


@lru_cache(maxsize=64)
def _blocks(rep: StandardRep, d: int) -> Dict[Weight, Block]:
    out: Dict[Weight, Block] = {}
    for weight, indices in rep.weight_blocks(d).items():
        out[weight] = (tuple(indices), tuple(rep.word_at(i, d) for i in indices))
    return out


def _assemble(rep: StandardRep, d: int, local: Callable[[Weight], SubspaceBasis],
              threads: int) -> SubspaceBasis:
    blocks = _blocks(rep, d)
    weights = list(blocks)
    if threads > 1 and len(weights) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(local, weights))
    else:
        results = [local(w) for w in weights]
    return SubspaceBasis.from_blocks(
        rep.tensor_dim(d), [(blocks[w][0], s) for w, s in zip(weights, results)])


def _threads(threads: Optional[int], settings: EngineSettings) -> int:
    return max(1, threads if threads is not None else settings.threads)


# -- block-local spaces -------------------------------------------------------

@lru_cache(maxsize=2048)
def _traceless_block(rep: StandardRep, d: int, weight: Weight,
                     threshold: float = DEFAULT_SETTINGS.sparse_density_threshold) -> SubspaceBasis:
    _, words = _blocks(rep, d)[weight]
    if d < 2:
        return SubspaceBasis.full(len(words))
    rows = contraction_rows_local(rep, words)
    if not rows:
        return SubspaceBasis.full(len(words))
    return kernel_basis(RatMatrix.from_row_dicts(rows, len(words), threshold))


@lru_cache(maxsize=2048)
def _schur_block(rep: StandardRep, element: GroupAlgebraElement, weight: Weight) -> SubspaceBasis:
    d = element.degree
    _, words = _blocks(rep, d)[weight]
    local_index = {w: j for j, w in enumerate(words)}
    return SubspaceBasis.span(len(words), projector_images_local(element, words, local_index))


def _insertion_block(rep: StandardRep, d: int, weight: Weight) -> SubspaceBasis:
    _, words = _blocks(rep, d)[weight]
    lower = _blocks(rep, d - 2).get(weight) if d >= 2 else None
    if lower is None:
        return SubspaceBasis.zero(len(words))
    local_index = {w: j for j, w in enumerate(words)}
    return SubspaceBasis.span(len(words), insertion_images_local(rep, lower[1], d, local_index))


# -- public operations --------------------------------------------------------

def traceless_subspace(rep: StandardRep, d: int, *, threads: Optional[int] = None,
                       settings: EngineSettings = DEFAULT_SETTINGS) -> SubspaceBasis:
    """V^<d> = ∩_I ker Φ_I; the full space for d <= 1."""
    _check_size(rep, d, settings)
    threshold = settings.sparse_density_threshold
    out = _assemble(rep, d, lambda w: _traceless_block(rep, d, w, threshold), _threads(threads, settings))
    logger.debug("traceless %s d=%d: dim %d", rep.name, d, out.dim)
    return out


def schur_image(rep: StandardRep, t: FilledTableau, *, threads: Optional[int] = None,
                settings: EngineSettings = DEFAULT_SETTINGS) -> SubspaceBasis:
    """S_λV = p_t · V^⊗d for the tableau t."""
    d = t.degree
    _check_size(rep, d, settings)
    p = young_projector(t)
    return _assemble(rep, d, lambda w: _schur_block(rep, p, w), _threads(threads, settings))


def s_lambda_space(rep: StandardRep, lam: Partition, *, threads: Optional[int] = None,
                   settings: EngineSettings = DEFAULT_SETTINGS) -> SubspaceBasis:
    """S_<λ>V = S_λV ∩ V^<d>, using the row-major tableau of λ."""
    d = lam.size
    _check_size(rep, d, settings)
    p = young_projector(FilledTableau.canonical(lam))

    def local(weight: Weight) -> SubspaceBasis:
        traceless = _traceless_block(rep, d, weight, settings.sparse_density_threshold)
        return intersect(_schur_block(rep, p, weight), traceless)

    out = _assemble(rep, d, local, _threads(threads, settings))
    logger.info("S_<%s> for %s: dim %d (predicted zero: %s)", lam, rep.name, out.dim,
                predicted_vanishing(rep.kind, rep.n, lam))
    return out


def predicted_vanishing(kind: FormKind, n: int, lam: Partition) -> bool:
    """Sp: λ_{n+1} > 0. O: first two columns longer than 2n in total."""
    if FormKind.parse(kind) is FormKind.SYMPLECTIC:
        return lam.part(n + 1) > 0
    c1, c2 = column_data(lam)
    return c1 + c2 > 2 * n


@dataclass(frozen=True)
class DecompositionAudit:
    kind: str
    n: int
    d: int
    ambient_dim: int
    traceless_dim: int
    insertion_dim: int
    intersection_dim: int

    @property
    def passed(self) -> bool:
        return (self.traceless_dim + self.insertion_dim == self.ambient_dim
                and self.intersection_dim == 0)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out


def decomposition_audit(rep: StandardRep, d: int, *,
                        settings: EngineSettings = DEFAULT_SETTINGS) -> DecompositionAudit:
    """Check V^⊗d = V^<d> ⊕ Σ_I im Ψ_I dimension by dimension."""
    _check_size(rep, d, settings)
    traceless = insertion = meet = 0
    for weight in _blocks(rep, d):
        t = _traceless_block(rep, d, weight, settings.sparse_density_threshold)
        s = _insertion_block(rep, d, weight)
        traceless += t.dim
        insertion += s.dim
        meet += intersect(t, s).dim
    audit = DecompositionAudit(rep.kind.value, rep.n, d, rep.tensor_dim(d), traceless, insertion, meet)
    logger.info("decomposition audit %s d=%d: %s", rep.name, d, "pass" if audit.passed else "FAIL")
    return audit


def _degree_of(rep: StandardRep, ambient_dim: int) -> int:
    d, size = 0, 1
    while size < ambient_dim:
        size *= rep.dim
        d += 1
    if size != ambient_dim:
        raise DimensionMismatchError(f"ambient {ambient_dim} is not a power of {rep.dim}")
    return d


def hodge_profile(rep: StandardRep, s: SubspaceBasis) -> HodgeProfile:
    """Dimension of s ∩ (H_0 = m) for every eigenvalue m."""
    d = _degree_of(rep, s.ambient_dim)
    by_eigenvalue: Dict[int, List[int]] = {}
    for idx, word in enumerate(rep.words(d)):
        by_eigenvalue.setdefault(rep.h0(word), []).append(idx)
    return HodgeProfile.from_mapping({m: s.coordinate_slice(cols) for m, cols in by_eigenvalue.items()})
