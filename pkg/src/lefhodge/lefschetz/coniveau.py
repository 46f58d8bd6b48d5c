"""
Coniveau certificates for H^k(A^m) of an abelian variety of totally real type.

H^k(A^m) ⊗ C = ∧^k(H^1(A)^{⊕m} ⊗ C) splits over the Lefschetz group block by
block: for every composition k = Σ k_b the piece ⊗_b ∧^{k_b}(c_b·V_b) is
decomposed with the character oracle. A constituent with dominant weights
(μ_b) has Hodge level Σ_b |μ_b| and therefore coniveau (k - level)/2.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.lefhodge.characters.decompose import decompose
from src.lefhodge.characters.freudenthal import irr_character, weyl_dim
from src.lefhodge.characters.lambda_ring import std_character, wedge
from src.lefhodge.characters.weights import DominantWeight, hodge_specialize
from src.lefhodge.config import DEFAULT_SETTINGS, EngineSettings
from src.lefhodge.data.schema import FormKind, HodgeProfile
from src.lefhodge.errors import InvalidInputError, RefusalError, guard
from src.lefhodge.lefschetz.albert import AbelianDescriptor
from src.lefhodge.lefschetz.group import GroupBlock, LefschetzGroupData, lefschetz_group

logger = logging.getLogger(__name__)

TYPE_IV_REFUSAL = ("coniveau certificates are refused for type IV factors: the Lefschetz-group "
                   "argument is too crude for powers of simple abelian varieties of type IV")

Label = Tuple[DominantWeight, ...]


@dataclass(frozen=True)
class ConiveauTable:
    """n -> dim N^n H^k, for n = 0..k//2."""

    k: int
    dims_by_n: Tuple[Tuple[int, int], ...]

    def as_dict(self) -> Dict[int, int]:
        return dict(self.dims_by_n)

    def __getitem__(self, n: int) -> int:
        return self.as_dict().get(n, 0)

    def is_monotone(self) -> bool:
        values = [d for _, d in self.dims_by_n]
        return all(a >= b for a, b in zip(values, values[1:]))

    def to_dict(self) -> Dict[str, int]:
        return {str(n): d for n, d in self.dims_by_n}


@dataclass(frozen=True)
class Constituent:
    label: Label
    dim: int
    multiplicity: int
    hodge_level: int
    coniveau: int
    block_levels: Tuple[int, ...]

    @property
    def total_dim(self) -> int:
        return self.dim * self.multiplicity

    def to_dict(self) -> dict:
        return {
            "label": [str(w) for w in self.label],
            "dim": self.dim,
            "multiplicity": self.multiplicity,
            "hodge_level": self.hodge_level,
            "coniveau": self.coniveau,
            "block_levels": list(self.block_levels),
        }


@dataclass(frozen=True)
class GHCCertificate:
    m: int
    k: int
    group: LefschetzGroupData
    constituents: Tuple[Constituent, ...]
    table: ConiveauTable

    @property
    def total_dim(self) -> int:
        return sum(c.total_dim for c in self.constituents)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "dim": self.total_dim,
            "group": self.group.to_dict(),
            "constituents": [c.to_dict() for c in self.constituents],
            "table": self.table.to_dict(),
        }

    def rows(self) -> List[dict]:
        """Flat per-constituent rows for tabular output."""
        return [
            {"label": " x ".join(str(w) for w in c.label), "dim": c.dim, "multiplicity": c.multiplicity,
             "hodge_level": c.hodge_level, "coniveau": c.coniveau}
            for c in self.constituents
        ]


def _weight_key(w: DominantWeight) -> Tuple[Tuple[int, ...], bool]:
    return w.coords, w.paired


@lru_cache(maxsize=1024)
def _block_wedge(kind: FormKind, n: int, copies: int, j: int) -> Tuple[Tuple[DominantWeight, int], ...]:
    """Constituents of ∧^j(copies·V) for the standard V of Sp_2n / O_2n."""
    h1 = std_character(kind, n).scale(copies)
    dec = decompose(wedge(h1, j), kind, n)
    logger.debug("∧^%d(%d·V) for %s rank %d: %d constituents", j, copies, kind.value, n, len(dec))
    return tuple(sorted(dec.items(), key=lambda item: _weight_key(item[0])))


def _compositions(k: int, caps: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    if not caps:
        if k == 0:
            yield ()
        return
    for j in range(min(k, caps[0]) + 1):
        for tail in _compositions(k - j, caps[1:]):
            yield (j,) + tail


def _composition_piece(blocks: Sequence[GroupBlock], m: int,
                       degrees: Tuple[int, ...]) -> Dict[Label, int]:
    per_block = [_block_wedge(b.kind.form_kind, b.rank, b.copies * m, j) for b, j in zip(blocks, degrees)]
    out: Dict[Label, int] = {(): 1}
    for consts in per_block:
        nxt: Dict[Label, int] = {}
        for label, mult in out.items():
            for w, c in consts:
                key = label + (w,)
                nxt[key] = nxt.get(key, 0) + mult * c
        out = nxt
    return out


def _check_request(desc: AbelianDescriptor, m: int, k: int, settings: EngineSettings) -> LefschetzGroupData:
    group = lefschetz_group(desc)
    if not desc.is_totally_real():
        logger.info("coniveau refused: descriptor has a type IV factor")
        raise RefusalError(TYPE_IV_REFUSAL)
    if m < 1:
        raise InvalidInputError(f"power m must be positive, got {m}", rule="power-range")
    total_rank = 2 * desc.total_dimension * m
    guard(total_rank, settings.max_cohomology_rank, "cohomology rank 2*dim(A)*m")
    if not (0 <= k <= total_rank):
        raise InvalidInputError(f"degree k={k} outside 0..{total_rank}", rule="degree-range")
    return group


def coniveau_report(desc: AbelianDescriptor, m: int, k: int, *, threads: Optional[int] = None,
                    settings: EngineSettings = DEFAULT_SETTINGS) -> GHCCertificate:
    group = _check_request(desc, m, k, settings)
    blocks = list(group.blocks)
    caps = [b.h1_dim * m for b in blocks]
    degrees = list(_compositions(k, caps))
    workers = max(1, threads if threads is not None else settings.threads)

    def piece(ds: Tuple[int, ...]) -> Dict[Label, int]:
        return _composition_piece(blocks, m, ds)

    if workers > 1 and len(degrees) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pieces = list(pool.map(piece, degrees))
    else:
        pieces = [piece(ds) for ds in degrees]

    merged: Dict[Label, int] = {}
    for p in pieces:
        for label, mult in p.items():
            merged[label] = merged.get(label, 0) + mult

    constituents = []
    for label in sorted(merged, key=lambda lab: tuple(_weight_key(w) for w in lab)):
        block_levels = tuple(w.level for w in label)
        lv = sum(block_levels)
        dim = prod(weyl_dim(b.kind.form_kind, b.rank, w) for b, w in zip(blocks, label))
        constituents.append(Constituent(label, dim, merged[label], lv, (k - lv) // 2, block_levels))

    expected = comb(group.h1_dim * m, k)
    total = sum(c.total_dim for c in constituents)
    if total != expected:
        raise ArithmeticError(f"constituents of H^{k} sum to {total}, expected {expected}")
    if any(c.hodge_level % 2 != k % 2 or c.coniveau < 0 for c in constituents):
        raise ArithmeticError(f"constituent level of wrong parity or beyond k in degree {k}")

    table = ConiveauTable(k, tuple(
        (n, sum(c.total_dim for c in constituents if c.coniveau >= n)) for n in range(k // 2 + 1)))
    logger.info("coniveau m=%d k=%d: dim %d, %d constituents, table %s",
                m, k, total, len(constituents), table.to_dict())
    return GHCCertificate(m, k, group, tuple(constituents), table)


@lru_cache(maxsize=1024)
def _irr_profile(kind: FormKind, n: int, w: DominantWeight) -> HodgeProfile:
    return hodge_specialize(irr_character(kind, n, w))


def constituent_profile(blocks: Sequence[GroupBlock], label: Label) -> HodgeProfile:
    """Hodge profile of ⊗_b V(μ_b) under the sum of the per-block Hodge elements."""
    out = HodgeProfile.from_mapping({0: 1})
    for b, w in zip(blocks, label):
        out = out.convolve(_irr_profile(b.kind.form_kind, b.rank, w))
    return out


def hodge_symmetry_audit(desc: AbelianDescriptor, m: int, k: int, *, threads: Optional[int] = None,
                         settings: EngineSettings = DEFAULT_SETTINGS) -> bool:
    """True when every constituent is numerically Hodge symmetric."""
    cert = coniveau_report(desc, m, k, threads=threads, settings=settings)
    ok = True
    for c in cert.constituents:
        profile = constituent_profile(cert.group.blocks, c.label)
        if not profile.is_palindromic() or profile.max_support != c.hodge_level:
            logger.warning("constituent %s fails the Hodge symmetry audit: %s",
                           [str(w) for w in c.label], profile.to_dict())
            ok = False
    return ok
