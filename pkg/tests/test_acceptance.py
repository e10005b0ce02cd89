"""Acceptance criteria 1-11, each at its stated tolerance (exact equality throughout)."""

import random
import time
from fractions import Fraction

from orthorep.identities import (
    decomposition_identity,
    macdonald_even,
    macdonald_odd,
    random_dominant,
    steinberg_dims,
    steinberg_even,
    steinberg_odd,
    steinberg_weight,
)
from orthorep.liealg import basis, weyl_dim
from orthorep.modbasis import enumerate_S, graded_component, graded_dim_formula, span_dim
from orthorep.oscrep import RepContext, build_op, build_op_inductive, homomorphism_failures
from orthorep.poly import ZERO, extended_var, f_lower, lex_leading
from orthorep.singular import (
    branching_table,
    enumerate_B,
    enumerate_H,
    leading_monomial,
    singular_poly,
    verify_singular,
)

SEED = 20240501
RANGES = [(0, "odd"), (1, "odd"), (2, "odd"), (1, "even"), (2, "even")]


def _rational_weights(n, count, rng):
    return [[Fraction(rng.randint(-12, 12), rng.randint(1, 7)) for _ in range(n + 1)] for _ in range(count)]


def _kind(parity):
    return "B" if parity == "odd" else "D"


def _ctx(parity, mu):
    return RepContext(len(mu) - 1, parity, [Fraction(m) for m in mu])


def test_criterion_01_homomorphism(criterion):
    rng = random.Random(SEED)
    start = time.time()
    bad, pairs = [], 0
    for n, parity in RANGES:
        for mu in _rational_weights(n, 3, rng):
            ctx = RepContext(n, parity, mu)
            size = len(basis(n, parity))
            pairs += size * (size - 1) // 2
            bad += [(n, parity, str(a), str(b)) for a, b in homomorphism_failures(ctx)]
    elapsed = time.time() - start
    ok = not bad and elapsed <= 300
    criterion(1, ok, f"{pairs} bracket pairs, {len(bad)} failures, {elapsed:.1f}s")
    assert not bad, bad[:5]
    assert elapsed <= 300


def test_criterion_02_oracle(criterion):
    rng = random.Random(SEED + 1)
    bad, total = [], 0
    for n, parity in RANGES:
        for mu in _rational_weights(n, 3, rng):
            ctx = RepContext(n, parity, mu)
            for e in basis(n, parity):
                total += 1
                if build_op(ctx, e) != build_op_inductive(ctx, e):
                    bad.append((n, parity, str(e)))
    criterion(2, not bad, f"{total} operators compared, {len(bad)} mismatches")
    assert not bad, bad[:5]


def test_criterion_03_determinant_identities(criterion):
    start = time.time()
    checked, bad = 0, []
    for parity in ("odd", "even"):
        for n in range(0 if parity == "odd" else 1, 4):
            X = lambda i, j: extended_var(i, j, n, parity)
            f = lambda s, t, r: f_lower(s, t, r, n, parity)
            for s in range(n + 1):
                for t in range(s):
                    for r in range(-n - 1, n + 2):
                        a = X(s, r) - sum((X(s, k) * f(k - 1, t, r) for k in range(t + 1, s + 1)), ZERO)
                        b = X(s, r) - sum((X(k, r) * f(s, k + 1, k + 1) for k in range(t, s)), ZERO)
                        checked += 2
                        if f(s, t, r) != a:
                            bad.append(("last row", parity, n, s, t, r))
                        if f(s, t, r) != b:
                            bad.append(("last column", parity, n, s, t, r))
            for row in range(n + 1):
                for s in range(n + 1):
                    for t in range(s + 1):
                        total = ZERO
                        for k in range(-(s + 1), row + 2):
                            total = total + X(row, k) * f(s, t, -k)
                        checked += 1
                        if total:
                            bad.append(("contraction", parity, n, row, s, t))
            if parity == "odd":
                rhs = sum((f(n, i, i) * X(i - 1, -(n + 1)) for i in range(1, n + 1)), ZERO)
                rhs = rhs - f(n, 0, 0) ** 2 * Fraction(1, 2)
                checked += 1
                if X(n, -(n + 1)) != rhs:
                    bad.append(("top variable", n))
    elapsed = time.time() - start
    ok = not bad and elapsed <= 120
    criterion(3, ok, f"{checked} polynomial identities, {len(bad)} failures, {elapsed:.1f}s")
    assert not bad, bad[:5]
    assert elapsed <= 120


def test_criterion_04_module_dimensions(criterion):
    cases = [
        ("odd", ["1/2"], 2),
        ("odd", ["1"], 3),
        ("odd", ["2"], 5),
        ("even", ["0", "1"], (1 - 0 + 1) * (1 + 0 + 1)),
        ("even", ["1", "2"], (2 - 1 + 1) * (2 + 1 + 1)),
        ("even", ["1/2", "1/2"], 1 * 2),
        ("odd", ["0", "1"], 5),
        ("odd", ["1/2", "1/2"], 4),
    ]
    start = time.time()
    rows, bad = [], []
    for parity, mu, expected in cases:
        ctx = _ctx(parity, mu)
        weyl = weyl_dim(len(mu), ctx.mu, _kind(parity))
        dim = span_dim(list(enumerate_S(ctx)), ctx)
        literal = span_dim(list(enumerate_S(ctx, reading="literal")), ctx)
        rows.append(f"{parity}({','.join(mu)})={dim}[literal {literal}]")
        if not dim == weyl == expected:
            bad.append((parity, mu, dim, weyl, expected))
    elapsed = time.time() - start
    ok = not bad and elapsed <= 600
    criterion(4, ok, "; ".join(rows) + f"; {elapsed:.1f}s")
    assert not bad, bad


def test_criterion_05_graded(criterion):
    ctx = _ctx("odd", ["0", "1"])
    ranks = [span_dim(graded_component(ctx, r), ctx) for r in range(3)]
    formula = [graded_dim_formula(ctx, r) for r in range(4)]
    ok_o5 = ranks == formula[:3] and formula[3] == 0
    weights = [
        ("odd", ["0", "1"]), ("odd", ["1/2", "3/2"]), ("odd", ["1", "2"]), ("odd", ["0", "2"]),
        ("odd", ["0", "0", "1"]), ("odd", ["1/2", "1/2", "3/2"]),
        ("even", ["0", "1"]), ("even", ["1", "2"]), ("even", ["-1", "2"]), ("even", ["-1/2", "3/2"]),
        ("even", ["1", "1", "1"]), ("even", ["-1", "1", "2"]),
    ]
    bad = []
    for parity, mu in weights:
        c = _ctx(parity, mu)
        top = int(2 * c.mu[-1])
        upper = [span_dim(graded_component(c, top - r), c) for r in range(top + 1)]
        for r in range(top + 1):
            # the closed form is taken on the lower half, where the alternating sum applies
            low = min(r, top - r)
            if graded_dim_formula(c, low, reflect=False) != upper[r]:
                bad.append((parity, mu, r))
        if sum(graded_dim_formula(c, r) for r in range(top + 1)) != weyl_dim(len(mu), c.mu, _kind(parity)):
            bad.append((parity, mu, "sum"))
    ok = ok_o5 and not bad
    criterion(5, ok, f"o(5) (0,1): ranks {ranks} formula {formula[:3]}; symmetry on {len(weights)} weights, {len(bad)} failures")
    assert ok_o5, (ranks, formula)
    assert not bad, bad


def test_criterion_06_singular(criterion):
    weights = [
        ("odd", ["2"]), ("odd", ["0", "1"]), ("odd", ["1/2", "3/2"]), ("odd", ["1", "2"]),
        ("odd", ["1/2", "1/2", "3/2"]), ("odd", ["0", "1", "2"]),
        ("even", ["1", "2"]), ("even", ["-1", "2"]), ("even", ["0", "0", "1"]),
        ("even", ["1", "1", "2"]), ("even", ["-1/2", "3/2", "5/2"]),
    ]
    count, bad = 0, []
    for parity, mu in weights:
        ctx = _ctx(parity, mu)
        for spec in enumerate_B(ctx):
            count += 1
            if not verify_singular(spec, ctx):
                bad.append((parity, mu, str(spec)))
    criterion(6, not bad, f"{count} products over {len(weights)} weights, {len(bad)} not annihilated")
    assert not bad, bad[:5]


def test_criterion_07_branching(criterion):
    cases = {
        "o(5)>o(3)": ("odd", [["0", "1"], ["1/2", "3/2"], ["1", "2"], ["0", "3"]]),
        "o(7)>o(5)": ("odd", [["0", "0", "1"], ["1/2", "1/2", "3/2"], ["0", "1", "1"], ["1", "1", "2"]]),
        "o(6)>o(4)": ("even", [["0", "0", "1"], ["1/2", "1/2", "3/2"], ["-1", "1", "2"], ["0", "1", "1"]]),
    }
    bad = []
    for label, (parity, weights) in cases.items():
        for mu in weights:
            ctx = _ctx(parity, mu)
            total = sum(m * d for _, m, d in branching_table(ctx))
            if total != weyl_dim(len(mu), ctx.mu, _kind(parity)):
                bad.append((label, mu, total))
    table = [(w.as_strings(), m, d) for w, m, d in branching_table(_ctx("odd", ["0", "1"]))]
    exact = table == [(["0"], 2, 1), (["1"], 1, 3)] and sum(m * d for _, m, d in table) == 5
    ok = exact and not bad
    criterion(7, ok, f"o(5)>o(3) (0,1) table {table}; {len(bad)} sum failures")
    assert exact, table
    assert not bad, bad


def test_criterion_08_decomposition(criterion):
    subweights = {
        "odd": {1: [["0"], ["1/2"], ["1"], ["2"]], 2: [["0", "1"], ["1/2", "1/2"], ["1", "2"]], 3: [["0", "0", "1"], ["1/2", "1/2", "1/2"], ["0", "1", "2"]]},
        "even": {1: [["0"], ["1"], ["-1/2"]], 2: [["0", "1"], ["1/2", "1/2"], ["-1", "2"], ["1", "2"]], 3: [["0", "0", "1"], ["1/2", "1/2", "1/2"], ["-1", "1", "2"]]},
    }
    cells, bad = 0, []
    for parity, by_n in subweights.items():
        for n, mus in by_n.items():
            for mu in mus:
                for r in range(7):
                    rep = decomposition_identity(n, mu, r, parity)
                    cells += 1
                    if not rep.passed:
                        bad.append((parity, n, mu, r, rep.lhs, rep.rhs))
    h1 = decomposition_identity(1, ["0"], 1, "odd")
    h2 = decomposition_identity(1, ["1/2"], 1, "odd")
    hand = (h1.lhs, h1.rhs) == (3, 3) and (h2.lhs, h2.rhs) == (6, 6)
    ok = hand and not bad
    criterion(8, ok, f"{cells} cells, {len(bad)} failures; hand cells {h1.lhs}={h1.rhs}, {h2.lhs}={h2.rhs}")
    assert hand
    assert not bad, bad[:5]


def test_criterion_09_macdonald(criterion):
    rng = random.Random(SEED + 9)
    start = time.time()
    cells, bad = 0, []
    for parity, ns, fn in (("odd", (1, 2, 3), macdonald_odd), ("even", (2, 3), macdonald_even)):
        for n in ns:
            for _ in range(20):
                lam = random_dominant(rng, n, parity, max_top=Fraction(4))
                rep = fn(n, lam)
                cells += 1
                if not rep.passed:
                    bad.append((parity, n, [str(x) for x in lam], rep.lhs, rep.rhs))
    elapsed = time.time() - start
    ok = not bad and elapsed <= 600
    criterion(9, ok, f"{cells} weights, {len(bad)} failures, {elapsed:.1f}s")
    assert not bad, bad[:5]


def test_criterion_10_steinberg(criterion):
    start = time.time()
    bad = []
    cells = 0
    for n in range(1, 7):
        for k in range(11):
            for fn in (steinberg_odd, steinberg_even):
                rep = fn(n, k)
                cells += 1
                if not rep.passed:
                    bad.append((rep.identity, n, k, rep.lhs, rep.rhs))
    for n in range(1, 4):
        for k in range(4):
            cells += 3
            if weyl_dim(n + 1, steinberg_weight(n, k, "odd"), "B") != (k + 1) ** ((n + 1) ** 2):
                bad.append(("closed odd", n, k))
            if weyl_dim(n + 1, steinberg_weight(n, k, "even"), "D") != (k + 1) ** (n * n + n):
                bad.append(("closed even", n, k))
            for parity in ("odd", "even"):
                rep = steinberg_dims(n, k, parity)
                if not rep.passed:
                    bad.append((rep.identity, n, k, rep.note))
    elapsed = time.time() - start
    ok = not bad and elapsed <= 60
    criterion(10, ok, f"{cells} cells, {len(bad)} failures, {elapsed:.1f}s")
    assert not bad, bad[:5]
    assert elapsed <= 60


def test_criterion_11_leading_monomial(criterion):
    rng = random.Random(SEED + 11)
    checked, bad = {"odd": 0, "even": 0}, []
    for parity in ("odd", "even"):
        ns = (0, 1, 2) if parity == "odd" else (1, 2)
        pools = {}
        while checked[parity] < 200:
            n = rng.choice(ns)
            lam = random_dominant(rng, n, parity, max_increment=2, max_top=Fraction(3))
            key = (n, lam)
            if key not in pools:
                pools[key] = list(enumerate_H(RepContext(n, parity, lam)))
            ctx = RepContext(n, parity, lam)
            spec = rng.choice(pools[key])
            checked[parity] += 1
            if lex_leading(singular_poly(spec, ctx), parity) != leading_monomial(spec):
                bad.append((parity, n, [str(x) for x in lam], str(spec)))
    criterion(11, not bad, f"{checked['odd']} odd + {checked['even']} even specs, {len(bad)} failures")
    assert not bad, bad[:5]
