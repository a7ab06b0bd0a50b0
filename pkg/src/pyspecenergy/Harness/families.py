"""Set families swept by the harness."""
# Our imports
from pyspecenergy.errors import OutOfRange
from pyspecenergy.Sets.constructors import (
    coset,
    coset_representatives,
    interval,
    mult_subgroup,
    nearest_divisor,
    random_set,
)

FAMILIES = ("interval", "random", "subgroup", "coset")
# default size |A| ~ p^(2/3), the subgroup regime of the tightness check
DEFAULT_SIZE_EXPONENT = 2.0 / 3.0


def family_size(p, size_exponent=DEFAULT_SIZE_EXPONENT):
    """Target cardinality round(p^size_exponent), clamped to [1, p - 1]."""
    return min(p - 1, max(1, round(p**size_exponent)))


def build_family(field, family, seed=0, size_exponent=DEFAULT_SIZE_EXPONENT):
    """
    Instance set of a family at modulus p.

    Parameters
    ----------
    field : PrimeField
    family : str
        'interval' {1..n}, 'random' (seeded, 0 avoided), 'subgroup' (order
        the divisor of p - 1 nearest the target) or 'coset' (that subgroup
        dilated by its smallest non-trivial coset representative).
    seed : int, optional
        used by the random family only.
    size_exponent : float, optional

    Returns
    -------
    tuple
        (FpSet, dict of family parameters).

    """
    target = family_size(field.p, size_exponent)
    if family == "interval":
        return interval(field, target), {"n": target}
    if family == "random":
        return random_set(field, target, seed=seed, avoid_zero=True), {"n": target}
    if family in ("subgroup", "coset"):
        d = nearest_divisor(field.order, field.p**size_exponent)
        H = mult_subgroup(field, d)
        if family == "subgroup":
            return H, {"d": d}
        reps = coset_representatives(field, H)
        lam = reps[1] if len(reps) > 1 else reps[0]
        return coset(field, H, lam), {"d": d, "lam": lam}
    raise OutOfRange(f"unknown family {family!r}, expected one of {FAMILIES}")
