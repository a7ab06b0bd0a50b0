import pytest

from pyspecenergy.errors import (
    NotADivisor,
    NotASubgroup,
    OutOfRange,
    TooLargeForBrute,
    ZeroElement,
    ZeroInSet,
)
from pyspecenergy.FieldArithmetic.primefield import make_field
from pyspecenergy.Energy.energies import additive_energy
from pyspecenergy.Sets.constructors import (
    coset,
    coset_representatives,
    difference_set,
    interval,
    is_subgroup,
    mult_subgroup,
    nearest_divisor,
    product_set,
    random_set,
    ratio_set,
    rep_sq_sum_aa,
    rep_sq_sum_aa_brute,
    stabilizer,
    sumset,
)
from pyspecenergy.Sets.fpset import FpSet


def test_interval():
    assert interval(make_field(101), 3) == FpSet(101, [1, 2, 3])
    assert interval(make_field(7), 6) == FpSet(7, range(1, 7))
    with pytest.raises(OutOfRange):
        interval(make_field(7), 7)


def test_random_set_is_deterministic():
    field = make_field(101)
    assert random_set(field, 10, seed=1) == random_set(field, 10, seed=1)
    assert random_set(field, 101).size == 101
    assert random_set(field, 0).is_empty()
    assert not random_set(field, 100, seed=3, avoid_zero=True).has_zero()
    with pytest.raises(OutOfRange):
        random_set(field, 101, avoid_zero=True)


@pytest.mark.parametrize(
    "p, d, members",
    [(7, 3, [1, 2, 4]), (13, 4, [1, 5, 8, 12]), (13, 1, [1]), (7, 6, [1, 2, 3, 4, 5, 6])],
)
def test_mult_subgroup(p, d, members):
    field = make_field(p)
    H = mult_subgroup(field, d)
    assert H == FpSet(p, members)
    assert is_subgroup(field, H)


def test_mult_subgroup_not_divisor():
    with pytest.raises(NotADivisor):
        mult_subgroup(make_field(7), 4)


def test_is_subgroup_rejects():
    field = make_field(13)
    assert not is_subgroup(field, FpSet(13, [1, 2]))
    assert not is_subgroup(field, FpSet(13, [1, 3, 9, 5]))
    assert not is_subgroup(field, FpSet(13, []))


def test_coset():
    field = make_field(7)
    H = FpSet(7, [1, 2, 4])
    assert coset(field, H, 3) == FpSet(7, [3, 6, 5])
    assert coset(field, H, 1) == H
    assert coset(field, H, 2) == H
    with pytest.raises(ZeroElement):
        coset(field, H, 0)
    with pytest.raises(NotASubgroup):
        coset(field, FpSet(7, [1, 3]), 2)


def test_coset_representatives():
    field = make_field(13)
    H = mult_subgroup(field, 4)
    reps = coset_representatives(field, H)
    assert reps == [1, 2, 4]
    union = set()
    for lam in reps:
        union |= set(coset(field, H, lam))
    assert union == set(range(1, 13))


def test_stabilizer():
    field = make_field(101)
    H = mult_subgroup(field, 25)
    assert stabilizer(field, H) == H
    assert stabilizer(field, coset(field, H, 2)) == H
    assert stabilizer(field, interval(field, 5)) == FpSet(101, [1])
    assert stabilizer(field, FpSet(101, [])) == FpSet(101, [1])


@pytest.mark.parametrize(
    "n, target, d",
    [(100, 21.7, 20), (100, 22.5, 25), (12, 4.4, 4), (12, 5, 6), (10, 100, 10)],
)
def test_nearest_divisor(n, target, d):
    assert nearest_divisor(n, target) == d


def test_sumset_and_difference_set():
    field7 = make_field(7)
    A = FpSet(7, [1, 2, 3])
    assert sumset(field7, A, A) == FpSet(7, [2, 3, 4, 5, 6])
    assert sumset(make_field(5), FpSet(5, [1, 2, 3]), FpSet(5, [1, 2, 3])).size == 5
    assert sumset(field7, FpSet(7, [0]), FpSet(7, [0])) == FpSet(7, [0])
    Q = FpSet(7, [1, 2, 4])
    assert difference_set(field7, Q, Q).size == 7


def test_product_and_ratio_sets():
    field = make_field(101)
    A = FpSet(101, [1, 2])
    assert product_set(field, A, A) == FpSet(101, [1, 2, 4])
    H = mult_subgroup(field, 25)
    assert product_set(field, H, H) == H
    assert ratio_set(field, H, H) == H
    assert ratio_set(field, A, A) == FpSet(101, [1, 2, 51])
    with pytest.raises(ZeroInSet):
        product_set(field, FpSet(101, [0, 1]), A)


def test_rep_sq_sum_aa_small_cases():
    field = make_field(101)
    assert rep_sq_sum_aa(field, FpSet(101, [5])) == 1
    A = FpSet(101, [1, 2])
    assert rep_sq_sum_aa(field, A) == rep_sq_sum_aa_brute(field, A)


def test_rep_sq_sum_aa_subgroup_identity():
    # r_{HH} = t 1_H, so the sum is t^4 E+(H)
    field = make_field(101)
    H = mult_subgroup(field, 10)
    t = H.size
    assert rep_sq_sum_aa(field, H) == t**4 * additive_energy(field, H).value


@pytest.mark.parametrize("seed", range(5))
def test_rep_sq_sum_aa_oracle(seed):
    field = make_field(1009)
    A = random_set(field, 8, seed=seed, avoid_zero=True)
    assert rep_sq_sum_aa(field, A) == rep_sq_sum_aa_brute(field, A)


def test_rep_sq_sum_aa_interval_oracle():
    field = make_field(1009)
    assert rep_sq_sum_aa(field, interval(field, 6)) == rep_sq_sum_aa_brute(field, interval(field, 6))
    with pytest.raises(TooLargeForBrute):
        rep_sq_sum_aa_brute(field, interval(field, 13))
