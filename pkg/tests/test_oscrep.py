from fractions import Fraction
import random

import pytest

from orthorep.errors import NotAWeightVector
from orthorep.liealg import basis
from orthorep.oscrep import (
    DiffOp,
    RepContext,
    build_op,
    build_op_inductive,
    check_highest_weight,
    commutator,
    homomorphism_failures,
    weight_of_vector,
)
from orthorep.poly import ONE, var


def _random_mu(rng, n):
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n + 1)]


CASES = [(0, "odd"), (1, "odd"), (2, "odd"), (1, "even"), (2, "even")]


@pytest.mark.parametrize("n,parity", CASES)
def test_homomorphism_generic_weight(n, parity):
    ctx = RepContext(n, parity, _random_mu(random.Random(n), n))
    assert homomorphism_failures(ctx) == []


@pytest.mark.parametrize("n,parity", CASES)
def test_closed_form_matches_functor_steps(n, parity):
    ctx = RepContext(n, parity, _random_mu(random.Random(100 + n), n))
    for e in basis(n, parity):
        assert build_op(ctx, e) == build_op_inductive(ctx, e), e


@pytest.mark.parametrize("n,parity", CASES)
def test_one_is_highest_weight(n, parity):
    ctx = RepContext(n, parity, _random_mu(random.Random(7), n))
    assert check_highest_weight(ctx)
    w = weight_of_vector(ctx, ONE)
    assert tuple(Fraction(str(x)) for x in w) == ctx.mu


@pytest.mark.parametrize("n", [1, 2])
def test_printed_sign_breaks_the_odd_bracket(n):
    ctx = RepContext(n, "odd", [Fraction(1, 2)] + [Fraction(3, 2)] * n)
    literal = lambda c, e: build_op(c, e, literal=True)
    assert homomorphism_failures(ctx, literal)


def test_weights_of_variables():
    ctx = RepContext(1, "odd", ["1/2", "3/2"])
    assert weight_of_vector(ctx, ONE) == ctx.weight()
    w = weight_of_vector(ctx, var(1, 1))
    # x[1,1] shifts the weight by e_1 - e_2
    assert [x.to_fraction() for x in w] == [Fraction(3, 2), Fraction(1, 2)]
    with pytest.raises(NotAWeightVector):
        weight_of_vector(ctx, ONE + var(1, 1))


def test_commutator_of_derivations():
    x, y = (0, 0), (1, 0)
    a = DiffOp({x: var(*y)})
    b = DiffOp({y: ONE})
    # [y d_x, d_y] = -d_x
    assert commutator(a, b) == DiffOp({x: -ONE})
