"""
Super plethysm of single-degree bigraded tables and the vanishing checks built on it.

Graded commutativity decides the operation: on an odd-degree table the
super-symmetric power is the ordinary exterior power and vice versa; on an
even-degree table both are ordinary. Powers are read off truncated
generating functions in t, x, y.
"""
from __future__ import annotations

import logging
from math import comb
from typing import Dict, Optional, Tuple

import sympy as sp

from src.lefhodge.errors import InvalidInputError
from src.lefhodge.hodge.bigraded import BigradedDims, abelian_hodge

logger = logging.getLogger(__name__)

t, x, y = sp.symbols("t x y")


def _factor(p: int, q: int, h: int, n: int, exterior: bool) -> sp.Poly:
    terms: Dict[Tuple[int, int, int], int] = {}
    for j in range(n + 1):
        c = comb(h, j) if exterior else comb(h + j - 1, j)
        if not c:
            break
        terms[(j, j * p, j * q)] = c
    return sp.Poly.from_dict(terms, t, x, y)


def _truncate(f: sp.Poly, n: int) -> sp.Poly:
    return sp.Poly.from_dict({m: c for m, c in f.terms() if m[0] <= n} or {(0, 0, 0): 0}, t, x, y)


def _power(a: BigradedDims, n: int, exterior: bool) -> BigradedDims:
    if n < 0:
        raise InvalidInputError(f"power must be nonnegative, got {n}", rule="degree")
    f = sp.Poly(1, t, x, y)
    for (p, q), h in a.table:
        f = _truncate(f * _factor(p, q, h, n, exterior), n)
    return BigradedDims.from_mapping({(int(mp), int(mq)): int(c) for (mt, mp, mq), c in f.terms() if mt == n})


def super_sym(a: BigradedDims, n: int) -> BigradedDims:
    deg = a.single_degree()
    return _power(a, n, exterior=deg is not None and deg % 2 == 1)


def super_ext(a: BigradedDims, n: int) -> BigradedDims:
    deg = a.single_degree()
    return _power(a, n, exterior=not (deg is not None and deg % 2 == 1))


def vanishing_threshold(g: int, i: int, depth: int = 0) -> int:
    """Σ_{j ≤ depth} C(g, j)·C(g, i - j); depth 0 gives C(g, i)."""
    return sum(comb(g, j) * comb(g, i - j) for j in range(0, depth + 1) if 0 <= i - j)


def _check_range(g: int, i: int, n: int) -> None:
    if g < 1 or not (0 <= i <= g):
        raise InvalidInputError(f"need 0 <= i <= g with g >= 1, got g={g}, i={i}", rule="vanishing-range")
    if n < 1:
        raise InvalidInputError(f"power must be at least 1, got {n}", rule="vanishing-range")


def _power_of_piece(g: int, i: int, n: int) -> BigradedDims:
    piece = abelian_hodge(g).degree_piece(2 * g - i)
    return super_sym(piece, n) if i % 2 == 1 else super_ext(piece, n)


def sym_vanishing_check(g: int, i: int, n: int, depth: int = 0) -> bool:
    """True when every entry (p, q) with q <= depth of the relevant power of h^{2g-i} is zero."""
    _check_range(g, i, n)
    power = _power_of_piece(g, i, n)
    ok = all(not power.row(q) for q in range(depth + 1))
    logger.debug("sym vanishing g=%d i=%d N=%d depth=%d: %s", g, i, n, depth, ok)
    return ok


def first_vanishing_power(g: int, i: int, max_n: int, depth: int = 0) -> Optional[int]:
    for n in range(1, max_n + 1):
        if sym_vanishing_check(g, i, n, depth):
            return n
    return None


def skew_vanishing(a: BigradedDims, n: int) -> bool:
    """True when the (·, 0) row of the alternating N-th power of an even-degree table vanishes."""
    deg = a.single_degree()
    if deg is not None and deg % 2:
        raise InvalidInputError(f"alternating check needs an even degree, got {deg}", rule="degree-parity")
    return not super_ext(a, n).row(0)
