"""
Contractions Φ_I : V^⊗d -> V^⊗(d-2) and insertions Ψ_I : V^⊗(d-2) -> V^⊗d.

Full matrices act on column vectors indexed by tensor words. The `*_local`
helpers restrict the same maps to one torus-weight block, which is how the
construction module uses them.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from src.lefhodge.combinat.group_algebra import GroupAlgebraElement, act_on_word
from src.lefhodge.config import DEFAULT_SETTINGS, EngineSettings
from src.lefhodge.errors import InvalidInputError
from src.lefhodge.exactlin.matrix import RatMatrix, RowDict
from src.lefhodge.weyl.standard_rep import StandardRep, Word

Pair = Tuple[int, int]


def check_pair(d: int, pair: Sequence[int]) -> Pair:
    if len(pair) != 2:
        raise InvalidInputError(f"index pair must have two entries, got {pair}", rule="pair-index")
    p, q = int(pair[0]), int(pair[1])
    if not (1 <= p < q <= d):
        raise InvalidInputError(f"pair ({p}, {q}) must satisfy 1 <= p < q <= {d}", rule="pair-index")
    return p, q


def all_pairs(d: int) -> List[Pair]:
    return [(p, q) for p in range(1, d + 1) for q in range(p + 1, d + 1)]


def contract_word(rep: StandardRep, word: Word, pair: Pair) -> Tuple[int, Word]:
    """(Q(v_p, v_q), word with positions p and q removed)."""
    p, q = pair
    value = rep.form(word[p - 1], word[q - 1])
    return value, word[: p - 1] + word[p:q - 1] + word[q:]


def insert_psi(rep: StandardRep, word: Word, pair: Pair) -> List[Tuple[Word, Fraction]]:
    """Terms of Ψ_I(word): ψ placed in factors p and q."""
    p, q = pair
    out = []
    for (a, b), c in rep.psi().items():
        w = list(word)
        w.insert(p - 1, a)
        w.insert(q - 1, b)
        out.append((tuple(w), c))
    return out


def contraction_matrix(rep: StandardRep, d: int, pair: Sequence[int], *,
                       settings: EngineSettings = DEFAULT_SETTINGS) -> RatMatrix:
    pair = check_pair(d, pair)
    entries: Dict[Tuple[int, int], Fraction] = {}
    for col, word in enumerate(rep.words(d)):
        value, target = contract_word(rep, word, pair)
        if value:
            key = (rep.word_index(target), col)
            entries[key] = entries.get(key, Fraction(0)) + value
    return RatMatrix.from_entries(rep.tensor_dim(d - 2), rep.tensor_dim(d), entries,
                                  settings.sparse_density_threshold)


def insertion_matrix(rep: StandardRep, d: int, pair: Sequence[int], *,
                     settings: EngineSettings = DEFAULT_SETTINGS) -> RatMatrix:
    pair = check_pair(d, pair)
    entries: Dict[Tuple[int, int], Fraction] = {}
    for col, word in enumerate(rep.words(d - 2)):
        for target, c in insert_psi(rep, word, pair):
            key = (rep.word_index(target), col)
            entries[key] = entries.get(key, Fraction(0)) + c
    return RatMatrix.from_entries(rep.tensor_dim(d), rep.tensor_dim(d - 2), entries,
                                  settings.sparse_density_threshold)


# -- block-local maps -------------------------------------------------------

def contraction_rows_local(rep: StandardRep, words: Sequence[Word]) -> List[RowDict]:
    """Stacked rows of every Φ_I restricted to the given words (local columns)."""
    d = len(words[0]) if words else 0
    rows: Dict[Tuple[Pair, Word], RowDict] = {}
    for j, word in enumerate(words):
        for pair in all_pairs(d):
            value, target = contract_word(rep, word, pair)
            if value:
                row = rows.setdefault((pair, target), {})
                row[j] = row.get(j, Fraction(0)) + value
    return [rows[k] for k in sorted(rows)]


def insertion_images_local(rep: StandardRep, sources: Iterable[Word], d: int,
                           local_index: Mapping[Word, int]) -> List[RowDict]:
    """Ψ_I(u) for every pair I and source word u, in local coordinates."""
    out: List[RowDict] = []
    for word in sources:
        for pair in all_pairs(d):
            v: RowDict = {}
            for target, c in insert_psi(rep, word, pair):
                j = local_index[target]
                v[j] = v.get(j, Fraction(0)) + c
            out.append({j: c for j, c in v.items() if c})
    return out


def projector_images_local(element: GroupAlgebraElement, words: Sequence[Word],
                           local_index: Mapping[Word, int]) -> List[RowDict]:
    """Images of the block's basis words under a group-algebra element acting by places."""
    out: List[RowDict] = []
    for word in words:
        v: RowDict = {}
        for sigma, c in element.terms:
            j = local_index[act_on_word(sigma, word)]
            v[j] = v.get(j, Fraction(0)) + c
        out.append({j: c for j, c in v.items() if c})
    return out
