"""Exact checks of the dimension and binomial identities, with parameter sweeps.

Every left-hand side is assembled from :func:`orthorep.liealg.weyl_dim` and
exact binomials; nothing is read from tables.  Each check returns an
:class:`IdentityReport` whose ``passed`` flag is plain integer equality.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import NonDominant
from .exact import binom, half_to_int
from .liealg import Weight, is_dominant, weyl_dim
from .oscrep import RepContext
from .poly import Parity, parse_parity

__all__ = [
    "IdentityReport",
    "reduced_weights",
    "macdonald_odd",
    "macdonald_even",
    "steinberg_odd",
    "steinberg_even",
    "steinberg_weight",
    "steinberg_dims",
    "decomposition_identity",
    "graded_consistency",
    "IDENTITIES",
    "sweep",
    "random_dominant",
]


@dataclass
class IdentityReport:
    identity: str
    params: Dict[str, Any]
    lhs: int
    rhs: int
    passed: bool
    note: str = ""

    def as_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        out["pass"] = out.pop("passed")
        return out


def _report(identity: str, params: Dict[str, Any], lhs, rhs, note: str = "") -> IdentityReport:
    # non-integral sides are reported as Fractions and never pass
    lhs_i = lhs.numerator if isinstance(lhs, Fraction) and lhs.denominator == 1 else lhs
    rhs_i = rhs.numerator if isinstance(rhs, Fraction) and rhs.denominator == 1 else rhs
    passed = isinstance(lhs_i, int) and isinstance(rhs_i, int) and lhs_i == rhs_i
    return IdentityReport(identity, params, lhs_i, rhs_i, passed, note)


def _mu(lam: Sequence) -> Tuple[Fraction, ...]:
    return tuple(Weight(lam)[i].to_fraction() for i in range(len(lam)))


def _fmt(mu: Sequence[Fraction]) -> List[str]:
    return [str(Weight([m])[0]) for m in mu]


def reduced_weights(mu: Sequence[Fraction]) -> List[Tuple[Fraction, ...]]:
    """lambda_s = (mu_1..mu_s, mu_{s+2}+1, ..., mu_{n+1}+1) for s = 0..n."""
    n = len(mu) - 1
    return [tuple(mu[:s]) + tuple(mu[i] + 1 for i in range(s + 1, n + 1)) for s in range(n + 1)]


def _d_sub(lam: Sequence, kind: str) -> int:
    if not lam:
        return 1
    if kind == "D" and len(lam) == 1:
        # o(2) is abelian: every irreducible module is a line
        return 1
    return weyl_dim(len(lam), lam, kind)


def _require(mu, kind: str) -> None:
    if not is_dominant(mu, kind):
        raise NonDominant(f"{_fmt(mu)} is not dominant for {kind}{len(mu)}")


def macdonald_odd(n: int, lam: Sequence) -> IdentityReport:
    """d_{2n+3}(lambda) as an alternating sum of o(2n+1) dimensions.

    The branch is chosen by the parity of 2*mu_{n+1}; the sum runs over s = 0..n.
    """
    mu = _mu(lam)
    if len(mu) != n + 1:
        raise ValueError(f"expected {n + 1} coordinates")
    _require(mu, "B")
    lhs = weyl_dim(n + 1, mu, "B")
    subs = [_d_sub(w, "B") for w in reduced_weights(mu)]
    odd_top = (2 * mu[n]).numerator % 2 == 1
    total = Fraction(0)
    for s in range(n + 1):
        sign = (-1) ** (n - s)
        if odd_top:
            total += 2 * sign * binom(half_to_int(n + s + Fraction(1, 2) + mu[s]), 2 * n + 1) * subs[s]
        else:
            w = Fraction(2 * s + 2 * mu[s] + 1, 2 * n + 1)
            total += sign * binom(half_to_int(n + s + mu[s]), 2 * n) * w * subs[s]
    branch = "2mu_top odd" if odd_top else "2mu_top even"
    return _report("macdonald-odd", {"n": n, "lambda": _fmt(mu)}, lhs, total, branch)


def macdonald_even(n: int, lam: Sequence) -> IdentityReport:
    """d_{2n+2}(lambda) as an alternating sum of o(2n) dimensions (mu_1 >= 0).

    For 2*mu_{n+1} odd the graded pieces pair up as r <-> 2mu_{n+1} - r, so
    the sum carries an overall factor 2.
    """
    mu = _mu(lam)
    if len(mu) != n + 1:
        raise ValueError(f"expected {n + 1} coordinates")
    _require(mu, "D")
    if mu[0] < 0:
        raise NonDominant("the even identity is stated for mu_1 >= 0")
    lhs = weyl_dim(n + 1, mu, "D")
    subs = [_d_sub(w, "D") for w in reduced_weights(mu)]
    odd_top = (2 * mu[n]).numerator % 2 == 1
    total = Fraction(0)
    for s in range(n + 1):
        sign = (-1) ** (n - s)
        if odd_top:
            total += 2 * sign * binom(half_to_int(n + s - Fraction(1, 2) + mu[s]), 2 * n) * subs[s]
        else:
            w = Fraction(s + mu[s]) / n
            total += sign * binom(half_to_int(n + s - 1 + mu[s]), 2 * n - 1) * w * subs[s]
    branch = "2mu_top odd" if odd_top else "2mu_top even"
    return _report("macdonald-even", {"n": n, "lambda": _fmt(mu)}, lhs, total, branch)


def steinberg_odd(n: int, k: int) -> IdentityReport:
    """Binomial identity from the odd Steinberg module, dispatched on the parity of k."""
    total = Fraction(0)
    if k % 2 == 1:
        for s in range(n + 1):
            top = n + (2 * s + 1) * (k + 1) // 2
            total += 2 * (-1) ** (n - s) * binom(top, 2 * n + 1) * binom(2 * n + 1, n - s)
        rhs = (k + 1) ** (2 * n + 1)
    else:
        for s in range(n + 1):
            top = n + ((2 * s + 1) * (k + 1) - 1) // 2
            total += (-1) ** (n - s) * binom(top, 2 * n) * binom(2 * n + 1, n - s) * Fraction(2 * s + 1, 2 * n + 1)
        rhs = (k + 1) ** (2 * n)
    return _report("steinberg-odd", {"n": n, "k": k}, total, rhs, "k odd" if k % 2 else "k even")


def steinberg_even(n: int, k: int) -> IdentityReport:
    """sum_s (-1)^{n-s} s C(n+s(k+1)-1, 2n-1) C(2n, n-s) = n (k+1)^{2n-1}."""
    lhs = sum((-1) ** (n - s) * s * binom(n + s * (k + 1) - 1, 2 * n - 1) * binom(2 * n, n - s) for s in range(1, n + 1))
    return _report("steinberg-even", {"n": n, "k": k}, lhs, n * (k + 1) ** (2 * n - 1))


def steinberg_weight(n: int, k: int, parity) -> Tuple[Fraction, ...]:
    """k times the sum of fundamental weights of o(2n+3) or o(2n+2)."""
    if parse_parity(parity) is Parity.ODD:
        return tuple(Fraction(2 * i - 1, 2) * k for i in range(1, n + 2))
    return tuple(Fraction((i - 1) * k) for i in range(1, n + 2))


def steinberg_dims(n: int, k: int, parity) -> IdentityReport:
    """Weyl dimensions at the Steinberg weight and at every lambda_s against the closed forms.

    lhs is the number of matching quantities, rhs the number checked.
    """
    parity = parse_parity(parity)
    mu = steinberg_weight(n, k, parity)
    kind = "B" if parity is Parity.ODD else "D"
    checks = []
    if parity is Parity.ODD:
        checks.append(("d", weyl_dim(n + 1, mu, "B"), (k + 1) ** ((n + 1) ** 2)))
        for s, w in enumerate(reduced_weights(mu)):
            checks.append((f"d_s{s}", _d_sub(w, "B"), binom(2 * n + 1, n - s) * (k + 1) ** (n * n)))
    else:
        checks.append(("d", weyl_dim(n + 1, mu, "D"), (k + 1) ** (n * n + n)))
        for s, w in enumerate(reduced_weights(mu)):
            # at s = 0 the product formula degenerates and the value is half of C(2n, n)
            coeff = binom(2 * n - 1, n) if s == 0 else binom(2 * n, n - s)
            checks.append((f"d_s{s}", _d_sub(w, "D"), coeff * (k + 1) ** (n * n - n)))
    bad = [f"{name}: {a} != {b}" for name, a, b in checks if a != b]
    return IdentityReport(
        f"steinberg-dims-{parity.value}",
        {"n": n, "k": k},
        len(checks) - len(bad),
        len(checks),
        not bad,
        "; ".join(bad),
    )


def decomposition_identity(n: int, mu: Sequence, r: int, parity, literal: bool = False) -> IdentityReport:
    """sum over beta in Omega-hat_r of d(lambda(beta)) against the tensor-product dimension.

    ``literal`` selects the uncorrected even bound on beta_-2 (see
    :func:`orthorep.singular.enumerate_Omega_hat`).
    """
    from .singular import enumerate_Omega_hat

    parity = parse_parity(parity)
    mu = _mu(mu)
    if len(mu) != n:
        raise ValueError(f"expected {n} coordinates")
    kind = "B" if parity is Parity.ODD else "D"
    _require(mu, kind)
    # the top coordinate only matters for the bounded set, which is not used here
    ctx = RepContext(n, parity, mu + ((mu[-1] if mu else Fraction(0)),))
    lhs = 0
    for beta in enumerate_Omega_hat(ctx, r, literal=literal):
        w = tuple(mu[i - 1] + beta.get(i, 0) - beta.get(-i, 0) for i in range(1, n + 1))
        lhs += _d_sub(w, kind)
    if parity is Parity.ODD:
        rhs = binom(2 * n + r, 2 * n) * _d_sub(mu, kind)
    else:
        rhs = binom(2 * n + r - 1, 2 * n - 1) * _d_sub(mu, kind)
    params = {"n": n, "mu": _fmt(mu), "r": r}
    return _report(f"decomposition-{parity.value}", params, lhs, rhs, "literal bound" if literal else "")


def graded_consistency(n: int, lam: Sequence, parity) -> IdentityReport:
    """Sum of the graded closed forms against the Weyl dimension."""
    from .modbasis import graded_dim_formula

    ctx = RepContext(n, parity, lam)
    top = half_to_int(2 * ctx.mu[n])
    lhs = sum(graded_dim_formula(ctx, r) for r in range(top + 1))
    rhs = weyl_dim(n + 1, ctx.mu, "B" if ctx.parity is Parity.ODD else "D")
    return _report(f"graded-{ctx.parity.value}", {"n": n, "lambda": _fmt(ctx.mu)}, lhs, rhs)


IDENTITIES: Dict[str, Callable[..., IdentityReport]] = {
    "macdonald-odd": macdonald_odd,
    "macdonald-even": macdonald_even,
    "steinberg-odd": steinberg_odd,
    "steinberg-even": steinberg_even,
    "steinberg-dims": steinberg_dims,
    "decomposition": decomposition_identity,
    "graded": graded_consistency,
}


def _run_cell(args: Tuple[str, Dict[str, Any]]) -> IdentityReport:
    name, params = args
    try:
        return IDENTITIES[name](**params)
    except Exception as exc:  # a failing cell must not abort the sweep
        return IdentityReport(name, _jsonable(params), 0, 0, False, f"{type(exc).__name__}: {exc}")


def _jsonable(params: Dict[str, Any]) -> Dict[str, Any]:
    out = {}
    for key, val in params.items():
        if isinstance(val, (list, tuple)):
            out[key] = [str(v) for v in val]
        elif isinstance(val, Parity):
            out[key] = val.value
        else:
            out[key] = val
    return out


def sweep(name: str, grid: Iterable[Dict[str, Any]], workers: int = 1) -> List[IdentityReport]:
    """Evaluate one identity over a grid; the result order follows the grid."""
    if name not in IDENTITIES:
        raise KeyError(f"unknown identity {name!r}; choose from {sorted(IDENTITIES)}")
    cells = [(name, dict(p)) for p in grid]
    if workers <= 1 or len(cells) < 2:
        return [_run_cell(c) for c in cells]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_cell, cells, chunksize=max(1, len(cells) // (4 * workers))))


def random_dominant(rng: random.Random, n: int, parity, max_increment: int = 4, max_top: Optional[Fraction] = None) -> Tuple[Fraction, ...]:
    """Draw k_1..k_{n+1} uniformly in 0..max_increment and rebuild mu.

    mu_1 = k_1 / 2 and mu_i = mu_{i-1} + k_i, which is dominant for both
    parities with mu_1 >= 0.  With ``max_top`` the draw is repeated until
    mu_{n+1} <= max_top.
    """
    parse_parity(parity)
    while True:
        ks = [rng.randint(0, max_increment) for _ in range(n + 1)]
        mu = [Fraction(ks[0], 2)]
        for k in ks[1:]:
            mu.append(mu[-1] + k)
        if max_top is None or mu[-1] <= max_top:
            return tuple(mu)
