from fractions import Fraction

import numpy as np
import pytest

from pyspecenergy.Energy.c4 import c4_aggregates, c4_aggregates_brute
from pyspecenergy.Energy.energies import (
    additive_energy,
    additive_energy_identity,
    balanced_additive_energy,
    balanced_additive_energy_fraction,
    difference_dilation_energy,
    mult_energy,
    mult_energy_k,
    mult_energy_k_brute,
    sigma_mult,
    sigma_mult_brute,
)
from pyspecenergy.errors import EmptySet, OutOfRange, TooLargeForBrute, ZeroInSet
from pyspecenergy.FieldArithmetic.primefield import make_field
from pyspecenergy.Sets.constructors import interval, mult_subgroup, random_set
from pyspecenergy.Sets.fpset import FpSet


@pytest.mark.parametrize("method", ["brute", "convolution", "fourier"])
def test_additive_energy_reference(method):
    field = make_field(101)
    assert additive_energy(field, FpSet(101, [1, 2, 3]), method=method).value == 19
    assert additive_energy(field, FpSet(101, [7]), method=method).value == 1


@pytest.mark.parametrize("p", [101, 211, 421, 1009])
@pytest.mark.parametrize("seed", range(25))
def test_additive_energy_methods_agree(p, seed):
    field = make_field(p)
    rng = np.random.default_rng(seed)
    A = random_set(field, int(rng.integers(1, 65)), seed=seed)
    B = random_set(field, int(rng.integers(1, 65)), seed=seed + 100)
    values = {additive_energy(field, A, B, method=m).value for m in ("brute", "convolution", "fourier")}
    assert len(values) == 1


def test_additive_energy_interval_closed_form():
    field = make_field(1009)
    n = 12
    assert additive_energy(field, interval(field, n)).value == (2 * n**3 + n) // 3


def test_additive_energy_errors():
    field = make_field(101)
    with pytest.raises(EmptySet):
        additive_energy(field, FpSet(101, []))
    with pytest.raises(TooLargeForBrute):
        additive_energy(field, FpSet(101, range(101)), method="brute")
    with pytest.raises(ValueError):
        additive_energy(field, FpSet(101, [1]), method="guess")


def test_additive_energy_identity():
    field = make_field(211)
    A = random_set(field, 30, seed=1)
    B = random_set(field, 11, seed=2)
    plus, minus, mixed = additive_energy_identity(field, A, B)
    assert plus == minus == mixed == additive_energy(field, A, B).value


def test_balanced_energy():
    field = make_field(7)
    Q = FpSet(7, [1, 2, 4])
    assert balanced_additive_energy_fraction(field, Q) == Fraction(24, 7)
    assert balanced_additive_energy(field, Q) == pytest.approx(24 / 7)
    assert balanced_additive_energy(field, FpSet(7, range(7))) == 0
    with pytest.raises(EmptySet):
        balanced_additive_energy(field, FpSet(7, []))


@pytest.mark.parametrize("p, t", [(101, 4), (101, 25), (211, 14), (421, 60)])
def test_subgroup_energies(p, t):
    field = make_field(p)
    H = mult_subgroup(field, t)
    assert mult_energy_k(field, H, 1).value == t * t
    assert mult_energy_k(field, H, 2).value == t**3
    assert mult_energy_k(field, H, 4).value == t**5
    assert sigma_mult(field, H).value == t * t
    assert mult_energy(field, H).value == t**3


def test_singleton_and_empty():
    field = make_field(101)
    one = FpSet(101, [1])
    for k in (1, 2, 3, 4):
        assert mult_energy_k(field, one, k).value == 1
    assert sigma_mult(field, one).value == 1
    empty = FpSet(101, [])
    assert mult_energy_k(field, empty, 2).value == 0
    assert sigma_mult(field, empty).value == 0


def test_mult_energy_errors():
    field = make_field(101)
    with pytest.raises(OutOfRange):
        mult_energy_k(field, FpSet(101, [1]), 5)
    with pytest.raises(ZeroInSet):
        mult_energy_k(field, FpSet(101, [0, 1]))
    with pytest.raises(TooLargeForBrute):
        mult_energy_k_brute(field, FpSet(101, range(1, 70)))


@pytest.mark.parametrize("seed", range(50))
@pytest.mark.parametrize("k", [2, 3, 4])
def test_mult_energy_oracle(seed, k):
    field = make_field((101, 211, 421, 1009)[seed % 4])
    R = random_set(field, 1 + seed % 40, seed=seed, avoid_zero=True)
    value = mult_energy_k(field, R, k).value
    assert value == mult_energy_k_brute(field, R, k).value
    # r_{R/R}(1) = |R| alone gives the diagonal bound
    assert value >= R.size**k


@pytest.mark.parametrize("seed", range(5))
def test_sigma_oracle(seed):
    field = make_field(211)
    R = random_set(field, 15, seed=seed + 3, avoid_zero=True)
    assert sigma_mult(field, R).value == sigma_mult_brute(field, R).value


def test_common_mult_energy():
    field = make_field(101)
    assert mult_energy(field, FpSet(101, [2]), FpSet(101, [3])).value == 1
    A = FpSet(101, [1, 2])
    # products 1, 2, 2, 4
    assert mult_energy(field, A).value == 6


def test_difference_dilation_energy_unit_dilation():
    # with R = {1} the sum is the balanced energy of A
    field = make_field(211)
    A = random_set(field, 25, seed=4)
    value = difference_dilation_energy(field, A, FpSet(211, [1]))
    assert value == pytest.approx(balanced_additive_energy(field, A), rel=1e-9)
    assert difference_dilation_energy(field, A, FpSet(211, [])) == 0


def test_difference_dilation_energy_sign_invariant():
    field = make_field(101)
    A = interval(field, 10)
    R = FpSet(101, [1, 100])
    # g is even, so lam and -lam contribute the same term
    single = difference_dilation_energy(field, A, FpSet(101, [1]))
    assert difference_dilation_energy(field, A, R) == pytest.approx(4 * single, rel=1e-9)


@pytest.mark.parametrize("seed", range(6))
def test_c4_aggregates_identities(seed):
    field = make_field(101)
    A = random_set(field, 6 + 2 * seed, seed=seed, avoid_zero=True)
    total, total_sq = c4_aggregates(field, A)
    assert total == A.size**4
    assert total_sq == mult_energy_k(field, A, 4).value


def test_c4_aggregates_subgroup():
    field = make_field(101)
    H = mult_subgroup(field, 10)
    assert c4_aggregates(field, H) == (10**4, 10**5)


@pytest.mark.parametrize("p, members", [(13, [1, 2, 3]), (13, [1, 5, 8, 12]), (17, [2, 3, 7, 11])])
def test_c4_aggregates_definition(p, members):
    field = make_field(p)
    A = FpSet(p, members)
    assert c4_aggregates(field, A) == c4_aggregates_brute(field, A)


def test_c4_guards():
    field = make_field(101)
    with pytest.raises(TooLargeForBrute):
        c4_aggregates(field, interval(field, 33))
    with pytest.raises(TooLargeForBrute):
        c4_aggregates_brute(make_field(211), FpSet(211, [1]))
    with pytest.raises(ZeroInSet):
        c4_aggregates(field, FpSet(101, [0, 1]))
