"""
Bigraded dimension tables (Hodge diamonds) and their level / coniveau.

A table is stored as sorted ((p, q), dim) pairs and converts to and from
its Hodge polynomial Σ dim·x^p·y^q, which is where products happen.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, List, Mapping, Optional, Tuple, Union

import sympy as sp

from src.lefhodge.errors import InvalidInputError

x, y = sp.symbols("x y")

Bidegree = Tuple[int, int]


@dataclass(frozen=True)
class BigradedDims:
    table: Tuple[Tuple[Bidegree, int], ...] = ()

    @classmethod
    def from_mapping(cls, m: Mapping[Bidegree, int]) -> "BigradedDims":
        clean = {}
        for (p, q), d in m.items():
            if p < 0 or q < 0:
                raise InvalidInputError(f"negative bidegree ({p}, {q})", rule="bidegree")
            if d < 0:
                raise InvalidInputError(f"negative dimension at ({p}, {q})", rule="bidegree")
            if d:
                clean[(int(p), int(q))] = int(d)
        return cls(tuple(sorted(clean.items())))

    @classmethod
    def point(cls) -> "BigradedDims":
        return cls((((0, 0), 1),))

    @classmethod
    def from_polynomial(cls, f: sp.Expr) -> "BigradedDims":
        poly = sp.Poly(sp.expand(f), x, y)
        return cls.from_mapping({(int(p), int(q)): int(c) for (p, q), c in poly.terms()})

    def polynomial(self) -> sp.Expr:
        return sp.Add(*[d * x**p * y**q for (p, q), d in self.table])

    def as_dict(self) -> Dict[Bidegree, int]:
        return dict(self.table)

    def __getitem__(self, pq: Bidegree) -> int:
        return self.as_dict().get(tuple(pq), 0)

    def is_zero(self) -> bool:
        return not self.table

    @property
    def total(self) -> int:
        return sum(d for _, d in self.table)

    def degrees(self) -> List[int]:
        return sorted({p + q for (p, q), _ in self.table})

    def degree_piece(self, k: int) -> "BigradedDims":
        return BigradedDims(tuple(((p, q), d) for (p, q), d in self.table if p + q == k))

    def single_degree(self) -> Optional[int]:
        """The one total degree carried by the table; None for the zero table."""
        degs = self.degrees()
        if len(degs) > 1:
            raise InvalidInputError(f"table spans degrees {degs}, expected a single degree", rule="mixed-degree")
        return degs[0] if degs else None

    def betti(self, k: int) -> int:
        return self.degree_piece(k).total

    def row(self, q: int) -> Dict[int, int]:
        return {p: d for (p, qq), d in self.table if qq == q}

    def is_hodge_symmetric(self) -> bool:
        m = self.as_dict()
        return all(m.get((q, p), 0) == d for (p, q), d in m.items())

    def hodge_diamond(self) -> List[List[int]]:
        """Rows indexed by total degree k, entries h^{p,k-p} for p = k..0."""
        if not self.table:
            return []
        top = max(p + q for (p, q), _ in self.table)
        m = self.as_dict()
        return [[m.get((p, k - p), 0) for p in range(k, -1, -1)] for k in range(top + 1)]

    def to_dict(self) -> Dict[str, int]:
        return {f"{p},{q}": d for (p, q), d in self.table}


def abelian_hodge(g: int) -> BigradedDims:
    """h^{p,q}(A) = C(g,p)·C(g,q)."""
    if g < 0:
        raise InvalidInputError(f"dimension must be nonnegative, got {g}", rule="genus")
    return BigradedDims.from_mapping({(p, q): comb(g, p) * comb(g, q)
                                      for p in range(g + 1) for q in range(g + 1)})


def kunneth(a: BigradedDims, b: BigradedDims) -> BigradedDims:
    return BigradedDims.from_polynomial(a.polynomial() * b.polynomial())


def kunneth_power(a: BigradedDims, m: int) -> BigradedDims:
    out = BigradedDims.point()
    for _ in range(m):
        out = kunneth(out, a)
    return out


def level(a: BigradedDims) -> Optional[int]:
    """max |p - q| over nonzero entries; None stands for -inf (zero table)."""
    if a.is_zero():
        return None
    return max(abs(p - q) for (p, q), _ in a.table)


def coniveau_in_degree(a: BigradedDims, k: int) -> int:
    deg = a.single_degree()
    if deg is not None and deg != k:
        raise InvalidInputError(f"table lives in degree {deg}, not {k}", rule="mixed-degree")
    lv = level(a)
    return k if lv is None else (k - lv) // 2


def format_level(lv: Optional[int]) -> Union[str, int]:
    return "-inf" if lv is None else lv

