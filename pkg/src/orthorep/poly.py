"""Sparse polynomials over Q in the indexed variables x[i,j].

A monomial is a tuple of ``((i, j), exponent)`` pairs sorted by ``(i, j)``;
a polynomial maps monomials to nonzero rational coefficients.  Indices that
are not genuine variables (``|j| > i``) are handled by :func:`extended_var`,
which returns 1, 0 or a polynomial in the genuine variables.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .errors import IndexOutOfRange, ShapeMismatch, ZeroPolynomial
from .guards import check_rank

__all__ = [
    "Parity",
    "Var",
    "Monomial",
    "Poly",
    "var",
    "const",
    "extended_var",
    "det_F",
    "f_lower",
    "lex_key",
    "lex_leading",
    "monomial_str",
    "parse_parity",
    "variables",
    "is_variable",
]


class Parity(str, Enum):
    ODD = "odd"
    EVEN = "even"


def parse_parity(value: Union[str, Parity]) -> Parity:
    if isinstance(value, Parity):
        return value
    return Parity(value.strip().lower())


Var = Tuple[int, int]
Monomial = Tuple[Tuple[Var, int], ...]
Coeff = Union[int, Fraction]

ONE_MONO: Monomial = ()


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    ia = ib = 0
    la, lb = len(a), len(b)
    while ia < la and ib < lb:
        va, ea = a[ia]
        vb, eb = b[ib]
        if va == vb:
            out.append((va, ea + eb))
            ia += 1
            ib += 1
        elif va < vb:
            out.append(a[ia])
            ia += 1
        else:
            out.append(b[ib])
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


def _mono_deg(m: Monomial) -> int:
    return sum(e for _, e in m)


class Poly:
    """Immutable sparse polynomial; coefficients are ints or Fractions."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = _norm(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self) -> Mapping[Monomial, Coeff]:
        return self._terms

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_term(self) -> Coeff:
        return self._terms.get(ONE_MONO, 0)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(_mono_deg(m) for m in self._terms)

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({ONE_MONO: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c: Coeff) -> "Poly":
        if not c:
            return ZERO
        return Poly._raw({m: _norm(v * c) for m, v in self._terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: dict = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = _mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw({m: _norm(c) for m, c in out.items()})

    def __rmul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def partial(self, v: Var) -> "Poly":
        out = {}
        for m, c in self._terms.items():
            for k, (w, e) in enumerate(m):
                if w == v:
                    if e == 1:
                        nm = m[:k] + m[k + 1:]
                    else:
                        nm = m[:k] + ((w, e - 1),) + m[k + 1:]
                    out[nm] = _norm(c * e)
                    break
        return Poly._raw(out)

    def degree_in(self, v: Var) -> int:
        best = -1 if not self._terms else 0
        for m in self._terms:
            for w, e in m:
                if w == v and e > best:
                    best = e
        return best

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda mc: _storage_key(mc[0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            coef = _coeff_str(c)
            if not m:
                parts.append(coef)
            else:
                parts.append(f"{coef}*{monomial_str(m)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _coeff_str(c: Coeff) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _var_storage_key(v: Var) -> tuple:
    i, j = v
    return (i, 2 * abs(j) - (1 if j < 0 else 0))


def _storage_key(m: Monomial) -> tuple:
    return (_mono_deg(m), tuple((_var_storage_key(v), e) for v, e in sorted(m, key=lambda ve: _var_storage_key(ve[0]))))


def monomial_str(m: Monomial) -> str:
    if not m:
        return "1"
    parts = []
    for (i, j), e in sorted(m, key=lambda ve: _var_storage_key(ve[0])):
        parts.append(f"x[{i},{j}]" if e == 1 else f"x[{i},{j}]^{e}")
    return "*".join(parts)


def _as_poly(x) -> Poly | None:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return const(x)
    return None


ZERO = Poly._raw({})
ONE = Poly._raw({ONE_MONO: 1})


def const(c: Coeff) -> Poly:
    if not c:
        return ZERO
    return Poly._raw({ONE_MONO: _norm(c)})


def var(i: int, j: int) -> Poly:
    return Poly._raw({(((i, j), 1),): 1})


def monomial_poly(m: Monomial, c: Coeff = 1) -> Poly:
    return Poly._raw({m: c}) if c else ZERO


def is_variable(i: int, j: int, parity: Parity) -> bool:
    if i < 0 or abs(j) > i:
        return False
    return not (parity is Parity.EVEN and (j == 0 or i == 0))


def variables(n: int, parity: Parity) -> list:
    """All genuine variables x[i,j] with i <= n, in storage order."""
    parity = parse_parity(parity)
    out = []
    for i in range(n + 1):
        for j in sorted(range(-i, i + 1), key=lambda j: 2 * abs(j) - (j < 0)):
            if is_variable(i, j, parity):
                out.append((i, j))
    return out


@lru_cache(maxsize=None)
def _ext(i: int, j: int, parity: Parity) -> Poly:
    even = parity is Parity.EVEN
    if j == 0 and even:
        return ZERO
    if j > i + 1:
        return ZERO
    if j == i + 1:
        return ONE
    if -i <= j <= i:
        return var(i, j)
    if j == -(i + 1):
        acc = ZERO
        if even:
            for r in range(1, i + 1):
                acc = acc + var(i, r) * var(i, -r)
            return -acc
        for r in range(-i, i + 1):
            acc = acc + var(i, r) * var(i, -r)
        return acc.scale(Fraction(-1, 2))
    # j = -m with m >= i + 2; the sum runs over the genuine row m-1.
    m = -j
    acc = ZERO
    for r in range(1 - m, m):
        if even and r == 0:
            continue
        left = _ext(i, r, parity)
        if left:
            acc = acc + left * _ext(m - 1, -r, parity)
    return -acc


def extended_var(i: int, j: int, n: int, parity: Parity | str) -> Poly:
    """x[i,j] under the extended-index convention (memoized)."""
    parity = parse_parity(parity)
    if i < 0 or i > n:
        raise IndexOutOfRange(f"row {i} outside 0..{n}")
    if abs(j) > n + 1:
        raise IndexOutOfRange(f"column {j} outside -{n + 1}..{n + 1}")
    # even parity has no genuine variables in row 0, but its extended values
    # (x[0,1] = 1 and the recursive negatives) still enter the formulas
    return _ext(i, j, parity)


def _det(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Expansion by minors, memoized over column subsets."""
    size = len(matrix)
    if size == 0:
        return ONE
    prev = {(): ONE}
    for row in range(size):
        cur = {}
        for cols in combinations(range(size), row + 1):
            acc = ZERO
            for pos, c in enumerate(cols):
                entry = matrix[row][c]
                if not entry:
                    continue
                minor = prev[cols[:pos] + cols[pos + 1:]]
                if not minor:
                    continue
                term = entry * minor
                # c is the last column of the ordered subset after moving it past the larger ones
                acc = acc - term if (row - pos) % 2 else acc + term
            cur[cols] = acc
        prev = cur
    return prev[tuple(range(size))]


def det_F(s: int, t: int, theta: Sequence[int], n: int, parity: Parity | str) -> Poly:
    """The determinant of x[t+a, theta_b] for a, b in 0..s-t."""
    parity = parse_parity(parity)
    check_rank(n)
    if not 0 <= t <= s <= n:
        raise IndexOutOfRange(f"need 0 <= t <= s <= n, got t={t}, s={s}, n={n}")
    theta = tuple(theta)
    if len(theta) != s - t + 1:
        raise ShapeMismatch(f"expected {s - t + 1} columns, got {len(theta)}")
    for th in theta:
        if th < -n - 1 or th > s:
            raise IndexOutOfRange(f"column {th} outside [-{n + 1}, {s}]")
    return _det_cached(s, t, theta, parity)


@lru_cache(maxsize=None)
def _det_cached(s: int, t: int, theta: tuple, parity: Parity) -> Poly:
    matrix = [[_ext(t + a, th, parity) for th in theta] for a in range(s - t + 1)]
    return _det(matrix)


def f_lower(s: int, t: int, r: int, n: int, parity: Parity | str) -> Poly:
    """f_{s,t}(r) = F_{s,t}(t+1, ..., s, r)."""
    parity = parse_parity(parity)
    if abs(r) > n + 1:
        raise IndexOutOfRange(f"column {r} outside -{n + 1}..{n + 1}")
    if not 0 <= t <= s <= n:
        raise IndexOutOfRange(f"need 0 <= t <= s <= n, got t={t}, s={s}, n={n}")
    if r == s + 1:
        # unit lower-triangular matrix: x[i, i+1] = 1 sits on the diagonal
        return ONE
    if r > s + 1:
        # column r lies beyond every row's support; the last column is zero
        return ZERO
    return det_F(s, t, tuple(range(t + 1, s + 1)) + (r,), n, parity)


# Leading-monomial order.  Odd: coordinates run through rows n, n-1, ..., 0 and
# within row p through p, -p, p-1, ..., 1, -1, 0; the preferred monomial has the
# larger exponent at the first differing coordinate.  Even: coordinates run
# through rows 1, ..., n and within row p through 1, -1, 2, -2, ..., p, -p; the
# preferred monomial has the smaller exponent there.  Lower total degree wins
# first in both cases.


def _odd_pos(v: Var) -> tuple:
    i, j = v
    if j > 0:
        pos = 2 * (i - j)
    elif j < 0:
        pos = 2 * (i + j) + 1
    else:
        pos = 2 * i
    return (-i, pos)


def _even_pos(v: Var) -> tuple:
    i, j = v
    return (i, 2 * (abs(j) - 1) + (1 if j < 0 else 0))


def lex_key(m: Monomial, parity: Parity | str) -> tuple:
    """Sort key: the leading monomial of a polynomial is its key-minimal monomial."""
    parity = parse_parity(parity)
    if parity is Parity.ODD:
        seq = sorted(((_odd_pos(v), e) for v, e in m))
        return (_mono_deg(m), tuple((p, -e) for p, e in seq))
    seq = sorted(((_even_pos(v), e) for v, e in m))
    return (_mono_deg(m), tuple(((-p[0], -p[1]), e) for p, e in seq))


def lex_leading(p: Poly, parity: Parity | str) -> Monomial:
    if not p:
        raise ZeroPolynomial("the zero polynomial has no leading monomial")
    parity = parse_parity(parity)
    return min(p.terms, key=lambda m: lex_key(m, parity))


def poly_from_terms(pairs: Iterable[tuple]) -> Poly:
    out: dict = {}
    for m, c in pairs:
        out[m] = out.get(m, 0) + c
    return Poly(out)


def iter_monomials(p: Poly) -> Iterator[Monomial]:
    return iter(p.terms)
