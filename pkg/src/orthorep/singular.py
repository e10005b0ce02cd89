"""Singular vectors for the restriction o(2n+3) -> o(2n+1) and o(2n+2) -> o(2n).

A singular vector is a product of determinant polynomials described by a
:class:`SingularSpec`.  Products with the same leading monomial are
identified; one representative per class gives a basis of the singular
subspace, and the classes are in bijection with interlacing
(kappa, nu) patterns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import ConstraintViolation, InterlacingViolation, NonDominant, RankMismatch
from .exact import half_to_int
from .liealg import Weight, is_dominant, positive_roots_split, weyl_dim
from .oscrep import RepContext, build_op
from .poly import ONE, Monomial, Parity, Poly, extended_var, f_lower, parse_parity

__all__ = [
    "SingularSpec",
    "BranchingPattern",
    "k_values",
    "constraint_sums",
    "singular_poly",
    "verify_singular",
    "leading_monomial",
    "spec_beta",
    "spec_degree",
    "enumerate_H",
    "enumerate_B",
    "spec_weight",
    "to_pattern",
    "from_pattern",
    "enumerate_patterns",
    "enumerate_Omega_hat",
    "graded_involution",
    "branching_table",
    "subalgebra_dim",
]


@dataclass(frozen=True)
class SingularSpec:
    """Exponents of a product of singular factors.

    ``gamma[i]`` for i in -n..n (no 0 for even parity) and ``gamma_p[j]`` for
    j in 1..n; even parity has no gamma'_1 factor, so gamma_p[1] must be 0.
    Both are stored as sorted tuples of (index, exponent) with zeros dropped.
    """

    n: int
    parity: Parity
    gamma: Tuple[Tuple[int, int], ...]
    gamma_p: Tuple[Tuple[int, int], ...]

    def __init__(self, n: int, parity, gamma: Dict[int, int] | None = None, gamma_p: Dict[int, int] | None = None):
        parity = parse_parity(parity)
        gamma = dict(gamma or {})
        gamma_p = dict(gamma_p or {})
        for i, e in gamma.items():
            if abs(i) > n or (parity is Parity.EVEN and i == 0):
                raise ConstraintViolation(f"no gamma_{i} for n={n}, {parity.value}")
            if e < 0:
                raise ConstraintViolation(f"gamma_{i} = {e} is negative")
        lo = 2 if parity is Parity.EVEN else 1
        for j, e in gamma_p.items():
            if not lo <= j <= n:
                raise ConstraintViolation(f"no gamma'_{j} for n={n}, {parity.value}")
            if e < 0:
                raise ConstraintViolation(f"gamma'_{j} = {e} is negative")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "parity", parity)
        object.__setattr__(self, "gamma", tuple(sorted((i, e) for i, e in gamma.items() if e)))
        object.__setattr__(self, "gamma_p", tuple(sorted((j, e) for j, e in gamma_p.items() if e)))

    def g(self, i: int) -> int:
        return dict(self.gamma).get(i, 0)

    def gp(self, j: int) -> int:
        return dict(self.gamma_p).get(j, 0)

    def order_key(self) -> tuple:
        """(gamma_0, gamma_1, gamma_-1, ..., gamma'_1, ...): fixes the class representative."""
        key = [self.g(0)]
        for i in range(1, self.n + 1):
            key += [self.g(i), self.g(-i)]
        key += [self.gp(j) for j in range(1, self.n + 1)]
        return tuple(key)

    def as_dict(self) -> Dict[str, int]:
        out = {str(i): e for i, e in self.gamma}
        out.update({f"{j}'": e for j, e in self.gamma_p})
        return out

    def __str__(self) -> str:
        parts = [f"g{i}={e}" for i, e in self.gamma] + [f"g'{j}={e}" for j, e in self.gamma_p]
        return "{" + ", ".join(parts) + "}"


@dataclass(frozen=True)
class BranchingPattern:
    """kappa = (kappa_0, ..., kappa_n) odd or (kappa_1, ..., kappa_n) even; nu = (nu_1, ..., nu_n)."""

    kappa: Tuple[Fraction, ...]
    nu: Tuple[Fraction, ...]

    def as_strings(self) -> Dict[str, List[str]]:
        return {"kappa": [str(x) for x in self.kappa], "nu": [str(x) for x in self.nu]}


def _int(x) -> int:
    return half_to_int(x)


def k_values(ctx: RepContext) -> Dict[int, int]:
    """k_1, ..., k_{n+1} of the big weight."""
    mu = ctx.mu
    k = {}
    k[1] = _int(2 * mu[0]) if ctx.parity is Parity.ODD else _int(mu[1] + mu[0]) if ctx.n >= 1 else 0
    for i in range(2, ctx.n + 2):
        k[i] = _int(mu[i - 1] - mu[i - 2])
    return k


def constraint_sums(spec: SingularSpec) -> List[Tuple[str, int, int]]:
    """(label, value, bound index) for every defining inequality value <= k[bound]."""
    n, g, gp = spec.n, spec.g, spec.gp
    out = []
    if spec.parity is Parity.ODD:
        if n >= 1:
            out.append((f"g{n}+g'{n}", g(n) + gp(n), n + 1))
        for i in range(1, n):
            out.append((f"g{i}+g-{i + 1}+g'{i}", g(i) + g(-(i + 1)) + gp(i), i + 1))
        out.append(("g0+2g-1", g(0) + 2 * g(-1), 1))
        return out
    out.append((f"g{n}+g'{n}", g(n) + gp(n), n + 1))
    for i in range(2, n):
        out.append((f"g{i}+g-{i + 1}+g'{i}", g(i) + g(-(i + 1)) + gp(i), i + 1))
    if n >= 2:
        out.append(("g1+g-2", g(1) + g(-2), 2))
    out.append(("g-1+g-2", g(-1) + g(-2), 1))
    return out


def _check(spec: SingularSpec, ctx: RepContext) -> None:
    if (spec.n, spec.parity) != (ctx.n, ctx.parity):
        raise RankMismatch(f"spec for n={spec.n}, {spec.parity.value} used with n={ctx.n}, {ctx.parity.value}")
    k = k_values(ctx)
    for label, value, b in constraint_sums(spec):
        if value > k[b]:
            raise ConstraintViolation(f"{label} = {value} exceeds k{b} = {k[b]}")


def _factors(spec: SingularSpec) -> List[Tuple[Poly, int]]:
    n, par = spec.n, spec.parity
    out = []
    if par is Parity.ODD:
        for i in range(0, n + 1):
            out.append((f_lower(n, i, i, n, par), spec.g(i)))
        for j in range(1, n + 1):
            out.append((f_lower(n, j, -(n + 1), n, par), spec.gp(j)))
        for kk in range(0, n):
            out.append((extended_var(kk, -(n + 1), n, par), spec.g(-(kk + 1))))
        return out
    out.append((f_lower(n, 1, -1, n, par), spec.g(-1)))
    for i in range(1, n + 1):
        out.append((f_lower(n, i, i, n, par), spec.g(i)))
    for j in range(2, n + 1):
        out.append((f_lower(n, j, -(n + 1), n, par), spec.gp(j)))
    for kk in range(1, n):
        out.append((extended_var(kk, -(n + 1), n, par), spec.g(-(kk + 1))))
    return out


def singular_poly(spec: SingularSpec, ctx: RepContext) -> Poly:
    _check(spec, ctx)
    out = ONE
    for p, e in _factors(spec):
        if e:
            out = out * p ** e
    return out


def _sub_positive(ctx: RepContext):
    pos, _, _ = positive_roots_split(ctx.n, ctx.parity)
    return [e for e in pos if e.i <= ctx.n]


def verify_singular(spec: SingularSpec, ctx: RepContext, poly: Optional[Poly] = None) -> bool:
    """True iff every positive root vector of the subalgebra kills the product."""
    p = singular_poly(spec, ctx) if poly is None else poly
    return all(not build_op(ctx, e).apply(p) for e in _sub_positive(ctx))


def spec_beta(spec: SingularSpec) -> Dict[int, int]:
    """Exponents of x_{n,i} in the leading monomial."""
    beta = {}
    if spec.parity is Parity.ODD:
        beta[0] = spec.g(0)
    for s in range(1, spec.n + 1):
        beta[s] = spec.g(s) + spec.gp(s)
        beta[-s] = spec.g(-s) + spec.gp(s)
    return beta


def leading_monomial(spec: SingularSpec, parity=None) -> Monomial:
    n = spec.n
    return tuple(sorted(((n, i), e) for i, e in spec_beta(spec).items() if e))


def spec_degree(spec: SingularSpec) -> int:
    """Degree in the row-n variables, equal to the length of beta."""
    return sum(spec_beta(spec).values())


def _check_dominant(ctx: RepContext) -> None:
    kind = "B" if ctx.parity is Parity.ODD else "D"
    if not is_dominant(ctx.mu, kind):
        raise NonDominant(f"{ctx.weight()} is not dominant for {kind}{ctx.n + 1}")


def enumerate_H(ctx: RepContext) -> Iterator[SingularSpec]:
    """Every spec satisfying the defining inequalities."""
    _check_dominant(ctx)
    k = k_values(ctx)
    n, par = ctx.n, ctx.parity
    g_idx = [i for i in range(-n, n + 1) if par is Parity.ODD or i != 0]
    p_idx = list(range(1 if par is Parity.ODD else 2, n + 1))
    kmax = max(k.values())
    slots = [("g", i) for i in g_idx] + [("p", j) for j in p_idx]

    def rec(pos: int, gamma: dict, gamma_p: dict):
        if pos == len(slots):
            yield SingularSpec(n, par, gamma, gamma_p)
            return
        kind, idx = slots[pos]
        for e in range(kmax + 1):
            if kind == "g":
                gamma[idx] = e
            else:
                gamma_p[idx] = e
            spec = SingularSpec(n, par, gamma, gamma_p)
            # partial sums only grow, so stop at the first violation
            if any(value > k[b] for _, value, b in constraint_sums(spec)):
                break
            yield from rec(pos + 1, gamma, gamma_p)
        if kind == "g":
            gamma.pop(idx, None)
        else:
            gamma_p.pop(idx, None)

    yield from rec(0, {}, {})


def enumerate_B(ctx: RepContext, r: Optional[int] = None) -> List[SingularSpec]:
    """One representative per leading-monomial class, optionally of degree r."""
    best: Dict[Monomial, SingularSpec] = {}
    for spec in enumerate_H(ctx):
        if r is not None and spec_degree(spec) != r:
            continue
        lm = leading_monomial(spec)
        cur = best.get(lm)
        if cur is None or spec.order_key() < cur.order_key():
            best[lm] = spec
    return sorted(best.values(), key=lambda s: (spec_degree(s), s.order_key()))


def spec_weight(spec_or_beta, ctx: RepContext) -> Weight:
    """Subalgebra weight sum (mu_i + beta_i - beta_-i) e_i."""
    beta = spec_beta(spec_or_beta) if isinstance(spec_or_beta, SingularSpec) else dict(spec_or_beta)
    return Weight(ctx.mu[i - 1] + beta.get(i, 0) - beta.get(-i, 0) for i in range(1, ctx.n + 1))


def subalgebra_dim(ctx: RepContext, weight: Sequence) -> int:
    if ctx.n == 0 or (ctx.parity is Parity.EVEN and ctx.n == 1):
        return 1
    return weyl_dim(ctx.n, weight, "B" if ctx.parity is Parity.ODD else "D")


def to_pattern(spec: SingularSpec, ctx: RepContext) -> BranchingPattern:
    _check(spec, ctx)
    beta = spec_beta(spec)
    mu = [Fraction(0)] + list(ctx.mu)  # 1-based
    n = ctx.n
    kappa = {i: mu[i] + beta[i] for i in range(1, n + 1)}
    nu = {i: kappa[i] - beta[-i] for i in range(1, n + 1)}
    if ctx.parity is Parity.ODD:
        ref = min(mu[1], nu[1]) if n >= 1 else mu[1]
        k0 = ref - beta[0]
        return BranchingPattern((k0,) + tuple(kappa[i] for i in range(1, n + 1)), tuple(nu[i] for i in range(1, n + 1)))
    nu[1] = mu[1] + beta[1] - beta[-1]
    kappa[1] = max(abs(mu[1]), abs(nu[1])) + min(beta[1], beta[-1])
    return BranchingPattern(tuple(kappa[i] for i in range(1, n + 1)), tuple(nu[i] for i in range(1, n + 1)))


def _interlacing_problems(pattern: BranchingPattern, ctx: RepContext) -> List[str]:
    mu = [Fraction(0)] + list(ctx.mu)
    n = ctx.n
    kappa = [Fraction(x) for x in pattern.kappa]
    nu = [Fraction(x) for x in pattern.nu]
    bad = []
    if len(nu) != n or len(kappa) != (n + 1 if ctx.parity is Parity.ODD else n):
        return [f"pattern lengths {len(kappa)}, {len(nu)} do not fit n={n}"]
    if ctx.parity is Parity.ODD:
        k = {i: kappa[i] for i in range(n + 1)}
    else:
        k = {i: kappa[i - 1] for i in range(1, n + 1)}
    v = {i: nu[i - 1] for i in range(1, n + 1)}

    def chain(seq, label):
        for a, b in zip(seq, seq[1:]):
            if a > b:
                bad.append(f"{label}: {a} > {b}")

    if ctx.parity is Parity.ODD:
        top = [-mu[1], k[0], mu[1]]
        for i in range(1, n + 1):
            top += [k[i], mu[i + 1]]
        chain(top, "kappa/mu")
        if n >= 1:
            low = [-v[1], k[0], v[1]]
            for i in range(1, n):
                low += [k[i], v[i + 1]]
            low.append(k[n])
            chain(low, "kappa/nu")
            if (k[0] - min(mu[1], v[1])).denominator != 1:
                bad.append("kappa_0 has the wrong parity")
    else:
        top = [abs(mu[1])]
        for i in range(1, n + 1):
            top += [k[i], mu[i + 1]]
        chain(top, "kappa/mu")
        low = [abs(v[1])]
        for i in range(1, n):
            low += [k[i], v[i + 1]]
        low.append(k[n])
        chain(low, "kappa/nu")
    for i in range(1, n + 1):
        if (k[i] - mu[i]).denominator != 1 or (v[i] - mu[i]).denominator != 1:
            bad.append(f"kappa_{i} or nu_{i} not congruent to mu_{i}")
    return bad


def from_pattern(pattern: BranchingPattern, ctx: RepContext) -> SingularSpec:
    problems = _interlacing_problems(pattern, ctx)
    if problems:
        raise InterlacingViolation("; ".join(problems))
    mu = [Fraction(0)] + list(ctx.mu)
    n = ctx.n
    gamma: Dict[int, int] = {}
    gamma_p: Dict[int, int] = {}
    if ctx.parity is Parity.ODD:
        kappa = {i: Fraction(pattern.kappa[i]) for i in range(n + 1)}
        first = 1
    else:
        kappa = {i: Fraction(pattern.kappa[i - 1]) for i in range(1, n + 1)}
        first = 2
    nu = {i: Fraction(pattern.nu[i - 1]) for i in range(1, n + 1)}
    for i in range(first, n + 1):
        if mu[i] > nu[i]:
            gamma[-i], gamma_p[i] = _int(mu[i] - nu[i]), _int(kappa[i] - mu[i])
        else:
            gamma[i], gamma_p[i] = _int(nu[i] - mu[i]), _int(kappa[i] - nu[i])
    if ctx.parity is Parity.ODD:
        ref = min(mu[1], nu[1]) if n >= 1 else mu[1]
        gamma[0] = _int(ref - kappa[0])
    else:
        extra = _int(kappa[1] - max(abs(mu[1]), abs(nu[1])))
        if mu[1] > nu[1]:
            gamma[1], gamma[-1] = extra, extra + _int(mu[1] - nu[1])
        else:
            gamma[1], gamma[-1] = extra + _int(nu[1] - mu[1]), extra
    spec = SingularSpec(n, ctx.parity, gamma, gamma_p)
    _check(spec, ctx)
    return spec


def enumerate_patterns(ctx: RepContext) -> List[BranchingPattern]:
    """All interlacing patterns, enumerated directly from the inequalities."""
    _check_dominant(ctx)
    mu = [Fraction(0)] + list(ctx.mu)
    n = ctx.n
    odd = ctx.parity is Parity.ODD

    def frange(lo, hi, anchor):
        # values congruent to anchor mod 1 in [lo, hi]
        start = lo + ((anchor - lo) % 1)
        x = start
        while x <= hi:
            yield x
            x += 1

    out = []
    k_ranges = []
    for i in range(1, n + 1):
        lo = mu[i] if i > 1 or odd else abs(mu[1])
        k_ranges.append(list(frange(lo, mu[i + 1], mu[i])))
    for ks in itertools.product(*k_ranges):
        kap = {i: ks[i - 1] for i in range(1, n + 1)}
        # nu_1 lower bound comes from kappa_0 (odd) or |nu_1| <= kappa_1 (even)
        nu_ranges = []
        for i in range(1, n + 1):
            hi = kap[i]
            if i == 1:
                lo = Fraction(0) if odd else -kap[1]
            else:
                lo = kap[i - 1]
            nu_ranges.append(list(frange(lo, hi, mu[i])))
        for vs in itertools.product(*nu_ranges):
            if odd:
                ref = min(mu[1], vs[0]) if n >= 1 else mu[1]
                lo0 = max(-mu[1], -vs[0]) if n >= 1 else -mu[1]
                for k0 in frange(lo0, ref, mu[1]):
                    out.append(BranchingPattern((k0,) + tuple(ks), tuple(vs)))
            else:
                out.append(BranchingPattern(tuple(ks), tuple(vs)))
    return out


def enumerate_Omega_hat(ctx: RepContext, r: int, bounded: bool = False, literal: bool = False) -> List[Dict[int, int]]:
    """All beta with |beta| = r subject to the row inequalities.

    Odd tuples are indexed -n..n, even ones by +-1..+-n.  With ``bounded`` the
    top coordinate is capped by k_{n+1}.  Only mu_1..mu_n enter, except for the
    bounded cap.  For even parity with n = 1 the bound on beta_-1 needs mu_2 of
    the big algebra; it is applied only when ``bounded`` is set.

    The even bound on beta_-2 is beta_-2 - beta_2 <= mu_2 - kappa_1 with
    kappa_1 = max(|mu_1|, |nu_1|) + min(beta_1, beta_-1), which is what the
    singular-vector constraints give.  ``literal`` drops the min(beta_1,
    beta_-1) term; that variant over-counts and is kept for comparison.
    """
    if r < 0:
        return []
    n = ctx.n
    mu = [Fraction(0)] + list(ctx.mu)
    odd = ctx.parity is Parity.ODD
    k = {i: _int(mu[i] - mu[i - 1]) for i in range(2, n + 1)}
    if odd:
        k[1] = _int(2 * mu[1])
    elif n >= 2 or bounded:
        k[1] = _int(mu[2] + mu[1])
        k[2] = _int(mu[2] - mu[1])
    if bounded and n >= 1:
        k[n + 1] = _int(mu[n + 1] - mu[n])
    idx = [i for i in range(-n, n + 1) if odd or i != 0]
    out = []

    def ok(b: Dict[int, int]) -> bool:
        for i in range(0 if odd else 1, n):
            if b[i] > k[i + 1]:
                return False
        if bounded and b[n] > k[n + 1]:
            return False
        if odd:
            if n >= 1 and 2 * b[-1] > 2 * b[1] - b[0] + k[1]:
                return False
            for i in range(2, n + 1):
                if b[-i] > b[i] - b[i - 1] + k[i]:
                    return False
            return True
        if 1 in k and b[-1] > k[1]:
            return False
        if n >= 2:
            nu1 = mu[1] + b[1] - b[-1]
            kappa1 = max(abs(mu[1]), abs(nu1)) + (0 if literal else min(b[1], b[-1]))
            if b[-2] > mu[2] + b[2] - kappa1:
                return False
        for i in range(3, n + 1):
            if b[-i] > b[i] - b[i - 1] + k[i]:
                return False
        return True

    def rec(pos: int, left: int, b: Dict[int, int]):
        if pos == len(idx) - 1:
            b[idx[pos]] = left
            if ok(b):
                out.append(dict(b))
            return
        for e in range(left + 1):
            b[idx[pos]] = e
            rec(pos + 1, left - e, b)

    rec(0, r, {})
    return out


def graded_involution(spec: SingularSpec, ctx: RepContext) -> SingularSpec:
    """The degree-reflecting map r -> 2 mu_{n+1} - r on singular products.

    For odd parity the weight is preserved; for even parity the first
    coordinate of the weight changes sign, which leaves the o(2n) dimension
    unchanged.
    """
    _check(spec, ctx)
    k = k_values(ctx)
    n, g, gp = spec.n, spec.g, spec.gp
    gamma = {i: g(i) for i in range(-n, n + 1) if i}
    gamma_p = {}
    if spec.parity is Parity.ODD:
        gamma[0] = k[1] - g(0) - 2 * g(-1)
        if n >= 1:
            gamma_p[n] = k[n + 1] - g(n) - gp(n)
        for i in range(1, n):
            gamma_p[i] = k[i + 1] - g(i) - g(-(i + 1)) - gp(i)
    else:
        if n >= 2:
            gamma_p[n] = k[n + 1] - g(n) - gp(n)
        for i in range(2, n):
            gamma_p[i] = k[i + 1] - g(i) - g(-(i + 1)) - gp(i)
        gamma[1] = k[2] - g(1) - g(-2)
        gamma[-1] = k[1] - g(-1) - g(-2)
    out = SingularSpec(n, spec.parity, gamma, gamma_p)
    _check(out, ctx)
    return out


def branching_table(ctx: RepContext) -> List[Tuple[Weight, int, int]]:
    """(nu, multiplicity, subalgebra dimension) sorted by nu."""
    counts: Dict[Weight, int] = {}
    for spec in enumerate_B(ctx):
        w = spec_weight(spec, ctx)
        counts[w] = counts.get(w, 0) + 1
    return [(w, c, subalgebra_dim(ctx, w)) for w, c in sorted(counts.items(), key=lambda kv: [x.twice for x in kv[0]])]
