from fractions import Fraction

import pytest

from orthorep.errors import NonDominant, OutOfRange
from orthorep.liealg import weyl_dim
from orthorep.linalg import RowSpace
from orthorep.modbasis import (
    enumerate_S,
    generators,
    graded_component,
    graded_dim_formula,
    module_basis,
    span_dim,
)
from orthorep.oscrep import RepContext

# (parity, weight, corrected span, literal span); the module dimension equals the corrected span
TABLE = [
    ("odd", ["1/2"], 2, 2),
    ("odd", ["1"], 3, 3),
    ("odd", ["2"], 5, 5),
    ("odd", ["0", "1"], 5, 5),
    ("odd", ["1/2", "1/2"], 4, 3),
    ("odd", ["1/2", "3/2"], 16, 14),
    ("odd", ["0", "0", "1"], 7, 7),
    ("odd", ["1/2", "1/2", "1/2"], 8, 4),
    ("odd", ["1/2", "1/2", "3/2"], 48, 27),
    ("even", ["0", "1"], 4, 4),
    ("even", ["1", "2"], 8, 4),
    ("even", ["1/2", "1/2"], 2, 1),
    ("even", ["1", "1", "1"], 10, 1),
    ("even", ["1/2", "1/2", "3/2"], 20, 6),
    ("even", ["-1", "2"], 8, 8),
    ("even", ["-1/2", "3/2"], 6, 6),
    ("even", ["-1", "1", "2"], 45, 33),
]


def _ctx(parity, mu):
    return RepContext(len(mu) - 1, parity, [Fraction(m) for m in mu])


def _kind(parity):
    return "B" if parity == "odd" else "D"


@pytest.mark.parametrize("parity,mu,dim,_", TABLE)
def test_span_equals_weyl_dimension(parity, mu, dim, _):
    ctx = _ctx(parity, mu)
    assert span_dim(list(enumerate_S(ctx)), ctx) == dim == weyl_dim(len(mu), ctx.mu, _kind(parity))


@pytest.mark.parametrize("parity,mu,dim,_", TABLE)
def test_closure_oracle_agrees(parity, mu, dim, _):
    assert len(module_basis(_ctx(parity, mu))) == dim


@pytest.mark.parametrize("parity,mu,_,literal", TABLE)
def test_literal_budget_reading_shortfall(parity, mu, _, literal):
    ctx = _ctx(parity, mu)
    assert span_dim(list(enumerate_S(ctx, reading="literal")), ctx) == literal


@pytest.mark.parametrize("parity,mu", [("odd", ["1/2", "3/2"]), ("even", ["1", "2"]), ("even", ["-1", "2"])])
def test_span_lies_in_the_module(parity, mu):
    ctx = _ctx(parity, mu)
    space = RowSpace()
    space.extend(module_basis(ctx))
    # every word whose bottom degrees are admissible is a module vector
    for w in enumerate_S(ctx, reading="literal"):
        assert space.contains(w.expand(ctx)), str(w)


@pytest.mark.parametrize("parity,mu", [(p, m) for p, m, _, _ in TABLE])
def test_graded_ranks_match_formula(parity, mu):
    ctx = _ctx(parity, mu)
    top = int(2 * ctx.mu[-1])
    ranks = [span_dim(graded_component(ctx, r), ctx) for r in range(top + 1)]
    assert ranks == [graded_dim_formula(ctx, r) for r in range(top + 1)]
    assert ranks == ranks[::-1]
    assert sum(ranks) == weyl_dim(len(mu), ctx.mu, _kind(parity))
    assert graded_component(ctx, top + 1) == []


def test_o5_vector_grading():
    ctx = _ctx("odd", ["0", "1"])
    assert [graded_dim_formula(ctx, r) for r in range(3)] == [1, 3, 1]
    assert graded_dim_formula(ctx, 3) == 0


def test_raw_alternating_sum_is_not_symmetric():
    # valid only up to mu_{n+1}; the upper half comes from the reflection
    ctx = _ctx("odd", ["0", "2"])
    assert [graded_dim_formula(ctx, r, reflect=False) for r in range(5)] == [1, 3, 6, 3, -6]
    assert [graded_dim_formula(ctx, r) for r in range(5)] == [1, 3, 6, 3, 1]
    ctx = _ctx("even", ["-1", "2"])
    assert [graded_dim_formula(ctx, r, reflect=False) for r in range(5)] == [1, 2, 2, 2, 2]
    assert [graded_dim_formula(ctx, r) for r in range(5)] == [1, 2, 2, 2, 1]


def test_errors():
    with pytest.raises(NonDominant):
        list(enumerate_S(_ctx("odd", ["1", "0"])))
    with pytest.raises(OutOfRange):
        graded_component(_ctx("odd", ["0", "1"]), -1)
    with pytest.raises(ValueError):
        list(enumerate_S(_ctx("odd", ["0", "1"]), reading="other"))


def test_generators_are_nonconstant():
    for parity, n in [("odd", 1), ("odd", 2), ("even", 2)]:
        gens = generators(n, parity)
        assert gens
        for g in gens:
            assert not g.poly(n, parity).is_constant()
