"""Matrix model of o(2n+3) and o(2n+2), root data and the Weyl dimension formula.

Matrix labels run over -(n+1)..n+1 (label 0 only for odd parity) and the
basis elements are A[i,j] = E[i,j] - E[-j,-i].  Weights use the increasing
convention mu_1 <= mu_2 <= ... throughout; the textbook decreasing convention
is obtained by reversing the coordinate list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import InvalidIndex, NonDominant, RankMismatch
from .exact import HalfInt
from .poly import Parity, parse_parity

__all__ = [
    "BasisElem",
    "Weight",
    "RootSystem",
    "labels",
    "basis",
    "matrix_of",
    "bracket",
    "positive_roots_split",
    "root_system",
    "weyl_dim",
    "is_dominant",
    "reflect_even",
    "elem",
]


def labels(n: int, parity: Parity | str) -> List[int]:
    parity = parse_parity(parity)
    out = list(range(-(n + 1), n + 2))
    if parity is Parity.EVEN:
        out.remove(0)
    return out


def _canonical(i: int, j: int) -> Tuple[int, int, int]:
    """(sign, i', j') with A[i,j] = sign * A[i',j'] and (i',j') canonical; sign 0 for zero."""
    if i == -j:
        return (0, 0, 0)
    if abs(i) > abs(j):
        return (1, i, j) if i > 0 else (-1, -j, -i)
    if abs(j) > abs(i):
        return (1, i, j) if j > 0 else (-1, -j, -i)
    # i == j
    return (1, i, i) if i > 0 else (-1, -i, -i)


@dataclass(frozen=True, order=True)
class BasisElem:
    """Canonical A[i,j]: Cartan (i = j > 0), positive (i > |j|) or negative (j > |i|)."""

    i: int
    j: int
    n: int
    parity: Parity

    def __post_init__(self):
        object.__setattr__(self, "parity", parse_parity(self.parity))
        labs = set(labels(self.n, self.parity))
        if self.i not in labs or self.j not in labs:
            raise InvalidIndex(f"A[{self.i},{self.j}] outside labels for n={self.n}, {self.parity.value}")
        sign, ci, cj = _canonical(self.i, self.j)
        if sign != 1 or (ci, cj) != (self.i, self.j):
            raise InvalidIndex(f"A[{self.i},{self.j}] is not a canonical representative")

    @property
    def kind(self) -> str:
        if self.i == self.j:
            return "cartan"
        return "positive" if abs(self.i) > abs(self.j) else "negative"

    def __str__(self) -> str:
        return f"A[{self.i},{self.j}]"


def elem(i: int, j: int, n: int, parity: Parity | str) -> Tuple[int, BasisElem | None]:
    """Resolve an arbitrary A[i,j] through A[i,j] = -A[-j,-i]; returns (sign, element)."""
    parity = parse_parity(parity)
    labs = set(labels(n, parity))
    if i not in labs or j not in labs:
        raise InvalidIndex(f"A[{i},{j}] outside labels for n={n}, {parity.value}")
    sign, ci, cj = _canonical(i, j)
    if sign == 0:
        return (0, None)
    return (sign, BasisElem(ci, cj, n, parity))


def basis(n: int, parity: Parity | str) -> List[BasisElem]:
    parity = parse_parity(parity)
    labs = labels(n, parity)
    out = []
    for i in labs:
        for j in labs:
            sign, ci, cj = _canonical(i, j)
            if sign == 1 and (ci, cj) == (i, j):
                out.append(BasisElem(i, j, n, parity))
    return sorted(out, key=lambda e: (e.i, e.j))


def _index(k: int, n: int, parity: Parity) -> int:
    if parity is Parity.ODD:
        return k if k >= 0 else n + 1 - k
    return k - 1 if k > 0 else n - k


def matrix_size(n: int, parity: Parity | str) -> int:
    return 2 * n + 3 if parse_parity(parity) is Parity.ODD else 2 * n + 2


def matrix_of(e: BasisElem) -> List[List[int]]:
    size = matrix_size(e.n, e.parity)
    mat = [[0] * size for _ in range(size)]
    a = _index(e.i, e.n, e.parity), _index(e.j, e.n, e.parity)
    b = _index(-e.j, e.n, e.parity), _index(-e.i, e.n, e.parity)
    mat[a[0]][a[1]] += 1
    mat[b[0]][b[1]] -= 1
    return mat


def form_matrix(n: int, parity: Parity | str) -> List[List[int]]:
    """The split form sum x_k y_{-k}."""
    parity = parse_parity(parity)
    size = matrix_size(n, parity)
    mat = [[0] * size for _ in range(size)]
    for k in labels(n, parity):
        mat[_index(k, n, parity)][_index(-k, n, parity)] = 1
    return mat


def _matmul(a, b):
    size = len(a)
    return [[sum(a[r][k] * b[k][c] for k in range(size) if a[r][k]) for c in range(size)] for r in range(size)]


def decompose(mat: Sequence[Sequence[int]], n: int, parity: Parity | str) -> Dict[BasisElem, int]:
    """Coordinates of an element of o(m) in the canonical basis."""
    parity = parse_parity(parity)
    out = {}
    for e in basis(n, parity):
        c = mat[_index(e.i, n, parity)][_index(e.j, n, parity)]
        if c:
            out[e] = c
    return out


def bracket(a: BasisElem, b: BasisElem) -> Dict[BasisElem, int]:
    if (a.n, a.parity) != (b.n, b.parity):
        raise RankMismatch(f"cannot bracket {a} of o({a.n}) with {b} of o({b.n})")
    ma, mb = matrix_of(a), matrix_of(b)
    ab, ba = _matmul(ma, mb), _matmul(mb, ma)
    size = len(ma)
    comm = [[ab[r][c] - ba[r][c] for c in range(size)] for r in range(size)]
    return decompose(comm, a.n, a.parity)


def positive_roots_split(n: int, parity: Parity | str):
    """(positive, negative, cartan) root vectors of o(2n+3) or o(2n+2)."""
    elems = basis(n, parity)
    pos = [e for e in elems if e.kind == "positive"]
    neg = [e for e in elems if e.kind == "negative"]
    cartan = [e for e in elems if e.kind == "cartan"]
    return pos, neg, cartan


class Weight(tuple):
    """Weight coordinates (mu_1, ..., mu_m) as HalfInts, increasing convention."""

    def __new__(cls, values: Iterable):
        return super().__new__(cls, tuple(HalfInt.of(v) for v in values))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        return cls(v for v in text.split(",") if v.strip())

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self) + ")"

    def as_strings(self) -> List[str]:
        return [str(v) for v in self]


@dataclass(frozen=True)
class RootSystem:
    kind: str
    rank: int
    positive: Tuple[Tuple[int, ...], ...]
    rho_twice: Tuple[int, ...]


def root_system(kind: str, rank: int) -> RootSystem:
    """Positive roots as integer vectors in the epsilon basis; rho stored doubled."""
    kind = kind.upper()
    roots = []
    for jj in range(rank):
        for ii in range(jj):
            plus = [0] * rank
            plus[jj] += 1
            plus[ii] += 1
            minus = [0] * rank
            minus[jj] += 1
            minus[ii] -= 1
            roots.append(tuple(minus))
            roots.append(tuple(plus))
    if kind == "B":
        for ii in range(rank):
            v = [0] * rank
            v[ii] = 1
            roots.append(tuple(v))
    elif kind != "D":
        raise ValueError(f"unknown type {kind}")
    rho_twice = tuple(sum(r[c] for r in roots) for c in range(rank))
    return RootSystem(kind, rank, tuple(roots), rho_twice)


def is_dominant(lam: Sequence, kind: str) -> bool:
    mu = Weight(lam)
    kind = kind.upper()
    if not mu:
        return True
    for a, b in zip(mu, mu[1:]):
        d = b - a
        if not d.is_integer() or d < 0:
            return False
    if kind == "B":
        return mu[0] >= 0
    if len(mu) == 1:
        return True
    s = mu[0] + mu[1]
    return s.is_integer() and s >= 0


def reflect_even(lam: Sequence) -> Weight:
    """mu_1 -> -mu_1; the D-type diagram symmetry exchanging the two spin nodes."""
    mu = list(Weight(lam))
    if mu:
        mu[0] = -mu[0]
    return Weight(mu)


def weyl_dim(rank: int, lam: Sequence, kind: str) -> int:
    """prod over positive roots of (lam + rho, alpha) / (rho, alpha)."""
    mu = Weight(lam)
    if len(mu) != rank:
        raise RankMismatch(f"weight of length {len(mu)} for rank {rank}")
    if not is_dominant(mu, kind):
        raise NonDominant(f"{mu} is not dominant for {kind.upper()}{rank}")
    rs = root_system(kind, rank)
    num = 1
    den = 1
    for alpha in rs.positive:
        # inner products doubled to stay in the integers
        lr = sum((mu[c].twice + rs.rho_twice[c]) * alpha[c] for c in range(rank))
        r = sum(rs.rho_twice[c] * alpha[c] for c in range(rank))
        num *= lr
        den *= r
    value = Fraction(num, den)
    if value.denominator != 1 or value <= 0:
        raise AssertionError(f"Weyl product {value} is not a positive integer for {mu}")
    return value.numerator
