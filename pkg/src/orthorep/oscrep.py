"""First-order differential operator realizations of o(2n+3) and o(2n+2).

Two independent constructions are provided: :func:`build_op` evaluates the
closed formulas, and :func:`build_op_inductive` grows the representation one
row of variables at a time from the rank-one base case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from .errors import InvalidIndex, NotAWeightVector, ZeroPolynomial
from .exact import HalfInt, to_fraction
from .guards import check_rank
from .liealg import BasisElem, Weight, basis, bracket, elem, labels, positive_roots_split
from .poly import (
    ONE,
    ZERO,
    Parity,
    Poly,
    Var,
    const,
    extended_var,
    f_lower,
    parse_parity,
    var,
    _var_storage_key,
)

__all__ = [
    "DiffOp",
    "RepContext",
    "apply",
    "commutator",
    "build_op",
    "build_op_inductive",
    "weight_of_vector",
    "homomorphism_failures",
    "check_highest_weight",
]


class DiffOp:
    """sum_v coeffs[v] * d/dv + scalar, with polynomial coefficients."""

    __slots__ = ("_coeffs", "_scalar", "_hash")

    def __init__(self, coeffs: Mapping[Var, Poly] | None = None, scalar: Poly | int | Fraction = ZERO):
        self._coeffs = {v: c for v, c in (coeffs or {}).items() if c}
        self._scalar = scalar if isinstance(scalar, Poly) else const(scalar)
        self._hash = None

    @property
    def coeffs(self) -> Mapping[Var, Poly]:
        return self._coeffs

    @property
    def scalar(self) -> Poly:
        return self._scalar

    @classmethod
    def d(cls, v: Var) -> "DiffOp":
        return cls({v: ONE})

    @classmethod
    def mult(cls, p: Poly | int | Fraction) -> "DiffOp":
        return cls({}, p)

    def is_zero(self) -> bool:
        return not self._coeffs and not self._scalar

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self._coeffs == other._coeffs and self._scalar == other._scalar

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self._coeffs.items()), self._scalar))
        return self._hash

    def __add__(self, other: "DiffOp") -> "DiffOp":
        out = dict(self._coeffs)
        for v, c in other._coeffs.items():
            out[v] = out[v] + c if v in out else c
        return DiffOp(out, self._scalar + other._scalar)

    def __neg__(self) -> "DiffOp":
        return DiffOp({v: -c for v, c in self._coeffs.items()}, -self._scalar)

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + (-other)

    def scale(self, c) -> "DiffOp":
        return DiffOp({v: p.scale(c) for v, p in self._coeffs.items()}, self._scalar.scale(c))

    def lmul(self, p: Poly) -> "DiffOp":
        """Left multiplication by a polynomial."""
        return DiffOp({v: p * c for v, c in self._coeffs.items()}, p * self._scalar)

    def vector_part(self) -> "DiffOp":
        return DiffOp(self._coeffs)

    def apply_vector(self, p: Poly) -> Poly:
        acc = ZERO
        for v, c in self._coeffs.items():
            dp = p.partial(v)
            if dp:
                acc = acc + c * dp
        return acc

    def apply(self, p: Poly) -> Poly:
        return self.apply_vector(p) + self._scalar * p

    def __str__(self) -> str:
        parts = []
        for v in sorted(self._coeffs, key=_var_storage_key):
            parts.append(f"({self._coeffs[v]})*d[{v[0]},{v[1]}]")
        if self._scalar or not parts:
            parts.append(str(self._scalar))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"DiffOp({self})"


def apply(d: DiffOp, p: Poly) -> Poly:
    return d.apply(p)


def commutator(d1: DiffOp, d2: DiffOp) -> DiffOp:
    out: Dict[Var, Poly] = {}
    for v in set(d1.coeffs) | set(d2.coeffs):
        c = d1.apply_vector(d2.coeffs.get(v, ZERO)) - d2.apply_vector(d1.coeffs.get(v, ZERO))
        if c:
            out[v] = c
    scalar = d1.apply_vector(d2.scalar) - d2.apply_vector(d1.scalar)
    return DiffOp(out, scalar)


def _mu_tuple(values: Iterable) -> Tuple[Fraction, ...]:
    return tuple(to_fraction(HalfInt.of(v)) if isinstance(v, HalfInt) else Fraction(v) for v in values)


@dataclass(frozen=True)
class RepContext:
    """Rank n, parity and highest weight (mu_1, ..., mu_{n+1}); mu_0 = 0."""

    n: int
    parity: Parity
    mu: Tuple[Fraction, ...]

    def __init__(self, n: int, parity: Union[Parity, str], mu: Sequence):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "parity", parse_parity(parity))
        mu = _mu_tuple(mu)
        if len(mu) != n + 1:
            raise ValueError(f"expected {n + 1} weight coordinates, got {len(mu)}")
        if self.parity is Parity.EVEN and n < 1:
            raise ValueError("even parity needs n >= 1")
        object.__setattr__(self, "mu", mu)

    def m(self, j: int) -> Fraction:
        return Fraction(0) if j == 0 else self.mu[j - 1]

    def weight(self) -> Weight:
        return Weight(self.mu)


class _Acc:
    """Mutable accumulator used while assembling an operator."""

    def __init__(self):
        self.coeffs: Dict[Var, Poly] = {}
        self.scalar = ZERO

    def d(self, coeff: Poly, v: Var, sign: int = 1):
        if not coeff:
            return
        if sign < 0:
            coeff = -coeff
        self.coeffs[v] = self.coeffs[v] + coeff if v in self.coeffs else coeff

    def s(self, p: Poly):
        self.scalar = self.scalar + p

    def op(self) -> DiffOp:
        return DiffOp(self.coeffs, self.scalar)


def _resolve(ctx: RepContext, e) -> Tuple[int, int, int]:
    if isinstance(e, BasisElem):
        if (e.n, e.parity) != (ctx.n, ctx.parity):
            raise InvalidIndex(f"{e} does not belong to rank {ctx.n} {ctx.parity.value}")
        return 1, e.i, e.j
    i, j = e
    sign, be = elem(i, j, ctx.n, ctx.parity)
    if be is None:
        return 0, 0, 0
    return sign, be.i, be.j


def build_op(ctx: RepContext, e, literal: bool = False) -> DiffOp:
    """Closed-form operator for the basis element e (a BasisElem or an (i, j) pair).

    With ``literal=True`` the odd A[-i,j] formula keeps a ``+`` sign on its
    x[r,-j] d[r,i] sum; that variant is not a representation and exists only
    so the discrepancy can be demonstrated.
    """
    check_rank(ctx.n)
    sign, i, j = _resolve(ctx, e)
    if sign == 0:
        return DiffOp()
    op = _closed(ctx, i, j, literal and ctx.parity is Parity.ODD)
    return op if sign > 0 else -op


@lru_cache(maxsize=None)
def _closed(ctx: RepContext, a: int, b: int, literal: bool = False) -> DiffOp:
    n, par = ctx.n, ctx.parity
    odd = par is Parity.ODD

    def x(r, c):
        return extended_var(r, c, n, par)

    def f(s, t, r):
        return f_lower(s, t, r, n, par)

    def cols(r):
        """Genuine column indices of row r."""
        return [s for s in range(-r, r + 1) if odd or s != 0]

    acc = _Acc()
    if a == b:
        j = a
        for r in range(j, n + 1):
            acc.d(x(r, j), (r, j))
            acc.d(x(r, -j), (r, -j), -1)
        if j >= 1:
            for s in cols(j - 1):
                if abs(s) <= j - 1:
                    acc.d(x(j - 1, s), (j - 1, s), -1)
        acc.s(const(ctx.m(j)))
        return acc.op()

    if abs(a) > abs(b):
        # raising operator A[j,i]
        j, i = a, b
        for r in range(j, n + 1):
            acc.d(x(r, j), (r, i))
            acc.d(x(r, -i), (r, -j), -1)
        acc.d(ONE, (j - 1, i))
        return acc.op()

    # lowering operator A[i,j] with j > |i|
    i, j = a, b
    mu = ctx.m
    if i == 0:
        for r in range(j, n + 1):
            acc.d(x(r, 0), (r, j))
            acc.d(x(r, -j), (r, 0), -1)
        for r in range(0, j):
            for s in cols(r):
                acc.d(x(r, 0) * f(j - 1, r, s), (r, s), -1)
            acc.s(f(j - 1, r, 0).scale(mu(r + 1) - mu(r)))
            acc.d(x(r, -j), (r, 0), -1)
        return acc.op()

    if i > 0:
        for r in range(j, n + 1):
            acc.d(x(r, i), (r, j))
            acc.d(x(r, -j), (r, -i), -1)
        for s in range(1 - i, i):
            if odd or s != 0:
                acc.d(f(j - 1, i - 1, s), (i - 1, s), -1)
        for r in range(i, j):
            for s in cols(r):
                acc.d(x(r, i) * f(j - 1, r, s), (r, s), -1)
            acc.s(f(j - 1, r, i).scale(mu(r + 1) - mu(r)))
            acc.d(x(r, -j), (r, -i), -1)
        return acc.op()

    # A[-i,j] with 0 < i < j
    i = -i
    for r in range(j, n + 1):
        acc.d(x(r, -i), (r, j))
        acc.d(x(r, -j), (r, i), -1)
    if odd:
        for r in range(0, j):
            for s in cols(r):
                acc.d(x(r, -i) * f(j - 1, r, s), (r, s), -1)
            acc.s(f(j - 1, r, -i).scale(mu(r + 1) - mu(r)))
        for r in range(i, j):
            acc.d(x(r, -j), (r, i), 1 if literal else -1)
        for r in range(0, i):
            for s in cols(r):
                acc.d(x(r, -j) * f(i - 1, r, s), (r, s))
            acc.s(f(i - 1, r, -j).scale(mu(r) - mu(r + 1)))
        return acc.op()
    for r in range(i, j):
        for s in cols(r):
            acc.d(x(r, -i) * f(j - 1, r, s), (r, s), -1)
        acc.s(f(j - 1, r, -i).scale(mu(r + 1) - mu(r)))
        acc.d(x(r, -j), (r, i), -1)
    for r in range(0, i):
        for s in cols(r):
            acc.d(x(r, -i) * f(j - 1, r, s), (r, s), -1)
            acc.d(x(r, -j) * f(i - 1, r, s), (r, s))
        acc.s((f(i - 1, r, -j) - f(j - 1, r, -i)).scale(-(mu(r + 1) - mu(r))))
    return acc.op()


# inductive construction


def _row_cols(r: int, parity: Parity) -> list:
    return [s for s in range(-r, r + 1) if parity is Parity.ODD or s != 0]


def _base_ops(parity: Parity, mu1: Fraction) -> Dict[Tuple[int, int], DiffOp]:
    if parity is Parity.EVEN:
        # o(2) acting on a line with A[1,1] = mu_1
        return {(1, 1): DiffOp.mult(const(mu1))}
    y = var(0, 0)
    dy = (0, 0)
    return {
        (1, 1): DiffOp({dy: -y}, const(mu1)),
        (0, 1): DiffOp({dy: (y * y).scale(Fraction(-1, 2))}, y.scale(mu1)),
        (1, 0): DiffOp({dy: ONE}),
    }


def functor_step(old: Dict[Tuple[int, int], DiffOp], n: int, parity: Parity, mu_new: Fraction) -> Dict[Tuple[int, int], DiffOp]:
    """Extend a representation of the rank-n algebra on rows < n to rank n+1 with new row n."""

    def old_op(i, j):
        sign, be = elem(i, j, n - 1, parity) if n >= 1 else (0, None)
        if be is None:
            return DiffOp()
        op = old.get((be.i, be.j), DiffOp())
        return op if sign > 0 else -op

    cols = _row_cols(n, parity)
    dvec = DiffOp({(n, s): var(n, s) for s in cols})
    eta = ZERO
    for t in range(1, n + 1):
        eta = eta + var(n, t) * var(n, -t)
    if parity is Parity.ODD:
        eta = eta + (var(n, 0) * var(n, 0)).scale(Fraction(1, 2))
    euler_shift = dvec - DiffOp.mult(const(mu_new))

    new: Dict[Tuple[int, int], DiffOp] = {}
    for be in basis(n, parity):
        i, j = be.i, be.j
        if abs(i) <= n and abs(j) <= n:
            op = old_op(i, j)
            if (i, j) != (0, 0):
                op = op + DiffOp({(n, j): var(n, i)}) - DiffOp({(n, -i): var(n, -j)})
            new[(i, j)] = op
        elif i == j == n + 1:
            new[(i, j)] = -dvec + DiffOp.mult(const(mu_new))
        elif i == n + 1:
            new[(i, j)] = DiffOp.d((n, j))
        else:
            op = -euler_shift.lmul(var(n, i)) + DiffOp({(n, -i): eta})
            for r in cols:
                op = op - old_op(i, r).lmul(var(n, r))
            new[(i, j)] = op
    return new


@lru_cache(maxsize=None)
def _inductive_table(n: int, parity: Parity, mu: Tuple[Fraction, ...]) -> Dict[Tuple[int, int], DiffOp]:
    if parity is Parity.ODD and n == 0:
        return _base_ops(parity, mu[0])
    if parity is Parity.EVEN and n == 1:
        return functor_step(_base_ops(parity, mu[0]), 1, parity, mu[1])
    prev = _inductive_table(n - 1, parity, mu[:n])
    return functor_step(prev, n, parity, mu[n])


def build_op_inductive(ctx: RepContext, e) -> DiffOp:
    """Operator for e obtained by repeated extension from the rank-one base case."""
    check_rank(ctx.n)
    sign, i, j = _resolve(ctx, e)
    if sign == 0:
        return DiffOp()
    table = _inductive_table(ctx.n, ctx.parity, ctx.mu)
    op = table.get((i, j), DiffOp())
    return op if sign > 0 else -op


def weight_of_vector(ctx: RepContext, p: Poly) -> Weight:
    """Eigenvalues of the Cartan operators on p, or NotAWeightVector."""
    if not p:
        raise ZeroPolynomial("zero is not a weight vector")
    lead_m, lead_c = next(iter(p.items()))
    values = []
    for j in range(1, ctx.n + 2):
        image = build_op(ctx, (j, j)).apply(p)
        ratio = Fraction(image.terms.get(lead_m, 0)) / Fraction(lead_c)
        if image != p.scale(ratio):
            raise NotAWeightVector("not a simultaneous eigenvector of the Cartan operators")
        values.append(ratio)
    try:
        return Weight(values)
    except ValueError:
        # non-half-integral parameters: report the raw eigenvalues
        return tuple(values)  # type: ignore[return-value]


def homomorphism_failures(ctx: RepContext, builder=build_op) -> list:
    """All canonical pairs (a, b) with [rho(a), rho(b)] != rho([a, b])."""
    elems = basis(ctx.n, ctx.parity)
    ops = {e: builder(ctx, e) for e in elems}
    bad = []
    for ia, a in enumerate(elems):
        for b in elems[ia + 1:]:
            lhs = commutator(ops[a], ops[b])
            rhs = DiffOp()
            for e, c in bracket(a, b).items():
                rhs = rhs + ops[e].scale(c)
            if lhs != rhs:
                bad.append((a, b))
    return bad


def check_highest_weight(ctx: RepContext) -> bool:
    pos, _, cartan = positive_roots_split(ctx.n, ctx.parity)
    for e in pos:
        if build_op(ctx, e).apply(ONE):
            return False
    for e in cartan:
        if build_op(ctx, e).apply(ONE) != const(ctx.m(e.i)):
            return False
    return True
