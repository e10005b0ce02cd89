"""Exact row spaces of polynomials via fraction-free sparse elimination.

Each polynomial is a row indexed by monomials.  Rows are scaled to primitive
integer vectors and reduced against stored pivots by cross-multiplication, so
no rational arithmetic happens during elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, Optional

from .guards import check_entries
from .poly import Monomial, Poly, _storage_key

Row = Dict[Monomial, int]


def _primitive(row: Row) -> Row:
    g = 0
    for c in row.values():
        g = gcd(g, c)
        if g == 1:
            break
    lead = max(row, key=_storage_key)
    if row[lead] < 0:
        g = -g
    if g not in (0, 1):
        return {m: c // g for m, c in row.items()}
    return row


def integer_row(p: Poly) -> Row:
    den = 1
    for c in p.terms.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    return {m: int(c * den) for m, c in p.terms.items()}


class RowSpace:
    """Incrementally maintained echelon basis of a span of polynomials."""

    def __init__(self):
        self._pivots: Dict[Monomial, Row] = {}
        self._entries = 0

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def __len__(self) -> int:
        return len(self._pivots)

    def reduce(self, p: Poly | Row) -> Row:
        row = dict(p) if isinstance(p, dict) else integer_row(p)
        # only reduce leading terms: enough for rank and membership
        while row:
            lead = max(row, key=_storage_key)
            piv = self._pivots.get(lead)
            if piv is None:
                return _primitive(row)
            a = row[lead]
            b = piv[lead]
            g = gcd(a, b)
            fa, fb = b // g, a // g
            out = {m: c * fa for m, c in row.items()}
            for m, c in piv.items():
                v = out.get(m, 0) - fb * c
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
            row = out
        return row

    def add(self, p: Poly | Row) -> bool:
        """Insert p; True iff it enlarged the span."""
        row = self.reduce(p)
        if not row:
            return False
        lead = max(row, key=_storage_key)
        self._pivots[lead] = row
        self._entries += len(row)
        check_entries(self._entries)
        return True

    def contains(self, p: Poly) -> bool:
        return not self.reduce(p)

    def extend(self, polys: Iterable[Poly]) -> int:
        return sum(1 for p in polys if self.add(p))


def rank_of(polys: Iterable[Poly]) -> int:
    space = RowSpace()
    space.extend(polys)
    return space.rank


def intersect_dim(space_polys: Iterable[Poly], allowed) -> int:
    """dim(span(polys) ∩ {p : every monomial of p satisfies allowed})."""
    polys = list(space_polys)
    total = rank_of(polys)
    # project onto the disallowed coordinates; the kernel of that projection is the intersection
    projected = []
    for p in polys:
        bad = {m: c for m, c in p.terms.items() if not allowed(m)}
        projected.append(Poly(bad))
    return total - rank_of(projected)
