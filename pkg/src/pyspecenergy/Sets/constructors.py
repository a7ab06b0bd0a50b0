"""
Set families and sum/product set machinery.

Every generator is deterministic given its arguments; random sets come
from a seeded numpy Generator.
"""
import numpy as np

# Our imports
from pyspecenergy.Energy.convolution import cyclic_convolve
from pyspecenergy.Energy.repfunction import rep_mul
from pyspecenergy.errors import (
    NotADivisor,
    NotASubgroup,
    OutOfRange,
    TooLargeForBrute,
    ZeroElement,
)
from pyspecenergy.Sets.fpset import FpSet

# 4-tuple oracle for sum r^2_{AA+AA}
AA_BRUTE_MAX_SIZE = 12


def interval(field, n):
    """
    The interval {1, ..., n}.

    Parameters
    ----------
    field : PrimeField
    n : int
        1 <= n <= p - 1.

    Returns
    -------
    FpSet

    """
    if not 1 <= n <= field.p - 1:
        raise OutOfRange(f"interval length {n} outside [1, {field.p - 1}]")
    return FpSet(field.p, np.arange(1, n + 1))


def random_set(field, size, seed=0, avoid_zero=False):
    """
    Uniform sample without replacement from a seeded generator.

    Parameters
    ----------
    field : PrimeField
    size : int
        cardinality, at most p (p - 1 with avoid_zero).
    seed : int, optional
        numpy Generator seed. The default is 0.
    avoid_zero : bool, optional
        sample from F_p* only. The default is False.

    Returns
    -------
    FpSet
        same (p, size, seed, avoid_zero) always gives the same set.

    """
    pool = np.arange(1 if avoid_zero else 0, field.p)
    if not 0 <= size <= pool.size:
        raise OutOfRange(f"random set size {size} outside [0, {pool.size}]")
    rng = np.random.default_rng(seed)
    return FpSet(field.p, rng.choice(pool, size=size, replace=False))


def mult_subgroup(field, d):
    """
    The unique subgroup of F_p* of order d, {g^((p-1)/d j)}.

    Parameters
    ----------
    field : PrimeField
    d : int
        divisor of p - 1.

    Returns
    -------
    FpSet

    """
    if d < 1 or field.order % d:
        raise NotADivisor(f"{d} does not divide p - 1 = {field.order}")
    step = field.order // d
    return FpSet(field.p, field.pow_table[np.arange(d) * step])


def is_subgroup(field, H):
    """True when H is a multiplicative subgroup of F_p*."""
    if H.is_empty() or H.has_zero() or field.order % H.size:
        return False
    # F_p* is cyclic: a subgroup is the unique one of its order
    return H == mult_subgroup(field, H.size)


def coset(field, H, lam):
    """
    The coset lam * H.

    Parameters
    ----------
    field : PrimeField
    H : FpSet
        multiplicative subgroup.
    lam : int
        nonzero element.

    Returns
    -------
    FpSet

    """
    if int(lam) % field.p == 0:
        raise ZeroElement("coset multiplier must be nonzero")
    if not is_subgroup(field, H):
        raise NotASubgroup(f"{H!r} is not a subgroup of F_{field.p}*")
    return H.dilate(lam)


def coset_representatives(field, H):
    """
    Smallest element of each coset of the subgroup H, increasing.

    Parameters
    ----------
    field : PrimeField
    H : FpSet
        multiplicative subgroup.

    Returns
    -------
    list of int

    """
    if not is_subgroup(field, H):
        raise NotASubgroup(f"{H!r} is not a subgroup of F_{field.p}*")
    index = field.order // H.size
    # x and y share a coset iff dlog(x) = dlog(y) mod index
    classes = field.dlog_table[1:] % index
    reps = np.full(index, field.p, dtype=np.int64)
    np.minimum.at(reps, classes, np.arange(1, field.p, dtype=np.int64))
    return sorted(int(r) for r in reps)


def stabilizer(field, A):
    """
    Multiplicative stabilizer {h in F_p* : h A = A}.

    The stabilizer of A and of A minus {0} agree; it is a subgroup whose
    elements are ratios a / a0 for a fixed a0 in A.

    Returns
    -------
    FpSet
        a subgroup; {1} for structureless sets and for the empty set.

    """
    core = A.without_zero()
    if core.is_empty():
        return FpSet(field.p, [1])
    inv_a0 = field.inverse(int(core.elements[0]))
    members = []
    for a in core.elements:
        h = int(a) * inv_a0 % field.p
        if np.all(core.bitmap[core.elements * h % field.p]):
            members.append(h)
    return FpSet(field.p, members)


def nearest_divisor(n, target):
    """Divisor of n closest to target, the larger one on ties."""
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    return min(divisors, key=lambda d: (abs(d - target), -d))


def _shift_union(bitmap, shifts):
    out = np.zeros_like(bitmap)
    for s in shifts:
        out |= np.roll(bitmap, int(s))
    return out


def sumset(field, A, B):
    """
    A + B as a set, by shifting the bitmap of the larger set.

    Returns
    -------
    FpSet

    """
    small, large = (A, B) if A.size <= B.size else (B, A)
    return FpSet.from_bitmap(_shift_union(large.bitmap, small.elements))


def difference_set(field, A, B):
    """A - B as a set."""
    return sumset(field, A, B.negate())


def product_set(field, A, B):
    """
    AB as a set, by shifting exponent bitmaps mod p - 1.

    Returns
    -------
    FpSet

    """
    A.require_nonzero("product set operand")
    B.require_nonzero("product set operand")
    small, large = (A, B) if A.size <= B.size else (B, A)
    large_exp = np.zeros(field.order, dtype=bool)
    large_exp[large.exponents(field)] = True
    exps = _shift_union(large_exp, small.exponents(field))
    return FpSet(field.p, field.pow_table[np.flatnonzero(exps)])


def ratio_set(field, A, B):
    """A / B as a set."""
    B.require_nonzero("ratio set denominator")
    inverses = FpSet(field.p, field.inverse_table()[B.elements])
    return product_set(field, A, inverses)


def rep_sq_sum_aa(field, A):
    """
    Exact sum over x of r_{AA+AA}(x)^2.

    r_{AA} counts ordered pairs; r_{AA+AA} is its cyclic self-convolution.

    Parameters
    ----------
    field : PrimeField
    A : FpSet
        0 not in A.

    Returns
    -------
    int

    """
    A.require_nonzero()
    r_aa = rep_mul(field, A, A, "product").field_counts(field)
    r_sum = cyclic_convolve(r_aa, r_aa)
    return int(sum(r_sum[r_sum > 0].astype(object) ** 2))


def rep_sq_sum_aa_brute(field, A):
    """4-tuple enumeration oracle for rep_sq_sum_aa, |A| <= AA_BRUTE_MAX_SIZE."""
    A.require_nonzero()
    if A.size > AA_BRUTE_MAX_SIZE:
        raise TooLargeForBrute(f"|A| = {A.size} > {AA_BRUTE_MAX_SIZE}")
    products = (np.multiply.outer(A.elements, A.elements) % field.p).ravel()
    sums = (np.add.outer(products, products) % field.p).ravel()
    counts = np.bincount(sums, minlength=field.p)
    return int(sum(counts[counts > 0].astype(object) ** 2))
