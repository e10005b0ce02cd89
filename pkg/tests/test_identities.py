import json
import random
from fractions import Fraction

import pytest

from orthorep.errors import NonDominant
from orthorep.identities import (
    decomposition_identity,
    graded_consistency,
    macdonald_even,
    macdonald_odd,
    random_dominant,
    steinberg_dims,
    steinberg_even,
    steinberg_odd,
    steinberg_weight,
    sweep,
)
from orthorep.liealg import weyl_dim


def test_steinberg_examples():
    r = steinberg_odd(1, 1)
    assert r.passed and r.lhs == r.rhs == 8
    assert steinberg_odd(1, 0).rhs == 1
    assert steinberg_odd(5, 7).passed
    assert steinberg_even(1, 0).lhs == 1
    assert steinberg_even(1, 2).rhs == 3
    assert steinberg_even(4, 5).passed


@pytest.mark.parametrize("n,k", [(1, 1), (2, 3), (3, 2)])
def test_steinberg_closed_forms(n, k):
    odd = steinberg_weight(n, k, "odd")
    even = steinberg_weight(n, k, "even")
    assert weyl_dim(n + 1, odd, "B") == (k + 1) ** ((n + 1) ** 2)
    assert weyl_dim(n + 1, even, "D") == (k + 1) ** (n * n + n)
    assert steinberg_dims(n, k, "odd").passed
    assert steinberg_dims(n, k, "even").passed


def test_steinberg_dims_values():
    assert weyl_dim(2, steinberg_weight(1, 1, "odd"), "B") == 16
    assert weyl_dim(3, steinberg_weight(2, 1, "even"), "D") == 64
    rep = steinberg_dims(1, 1, "odd")
    assert rep.passed and rep.lhs == rep.rhs


def test_macdonald_small():
    assert macdonald_odd(1, [0, 1]).passed
    assert macdonald_odd(0, ["1/2"]).passed
    assert macdonald_even(2, [0, 1, 2]).passed
    assert macdonald_even(2, ["1/2", "1/2", "3/2"]).passed


@pytest.mark.parametrize("parity", ["odd", "even"])
def test_macdonald_random(parity):
    rng = random.Random(5)
    fn = macdonald_odd if parity == "odd" else macdonald_even
    for n in ([1, 2, 3] if parity == "odd" else [2, 3]):
        for _ in range(5):
            lam = random_dominant(rng, n, parity, max_top=Fraction(4))
            rep = fn(n, lam)
            assert rep.passed, rep


def test_decomposition_hand_cells():
    assert (decomposition_identity(1, [0], 1, "odd").lhs, decomposition_identity(1, [0], 1, "odd").rhs) == (3, 3)
    rep = decomposition_identity(1, ["1/2"], 1, "odd")
    assert rep.passed and rep.lhs == 6
    assert decomposition_identity(2, [0, 1], 0, "even").lhs == weyl_dim(2, [0, 1], "D")


def test_graded_consistency():
    assert graded_consistency(1, [0, 1], "odd").passed
    assert graded_consistency(2, [-1, 1, 2], "even").passed


def test_non_dominant_is_reported():
    with pytest.raises(NonDominant):
        decomposition_identity(2, [1, 0], 1, "odd")


def test_sweep_order_independent_of_workers():
    grid = [{"n": n, "k": k} for n in range(1, 4) for k in range(4)]
    serial = sweep("steinberg-odd", grid, workers=1)
    parallel = sweep("steinberg-odd", grid, workers=3)
    assert [r.as_dict() for r in serial] == [r.as_dict() for r in parallel]
    assert all(r.passed for r in serial)


def test_sweep_turns_errors_into_failed_cells():
    reports = sweep("decomposition", [{"n": 2, "mu": [1, 0], "r": 1, "parity": "odd"}, {"n": 1, "mu": [0], "r": 1, "parity": "odd"}])
    assert not reports[0].passed and "NonDominant" in reports[0].note
    assert reports[1].passed


def test_report_serializes():
    rec = steinberg_odd(3, 5).as_dict()
    assert json.loads(json.dumps(rec))["pass"] is True
