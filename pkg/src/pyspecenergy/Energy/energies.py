"""
Exact energies.

E+(A, B), E+(f_A), E_k^x(R), sigma^x(R), each with a fast path and an
enumeration oracle. Integer quantities are Python ints; the Fourier route
is a cross-check, never the source of truth.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

# Our imports
from pyspecenergy.Energy.repfunction import (
    rep_add,
    rep_add_brute,
    rep_mul,
    rep_mul_brute,
)
from pyspecenergy.errors import EmptySet, OutOfRange, TooLargeForBrute
from pyspecenergy.Spectral.fourier import fourier_table

METHODS = ("brute", "convolution", "fourier")
# |A|^2 |B|^2 guard for quadruple enumeration
ADDITIVE_BRUTE_LIMIT = 10**8
# |R| guard for multiplicative oracles
MULT_BRUTE_MAX_SIZE = 64
# comparisons per block when counting equal pairs
PAIR_BLOCK = 1 << 22
BALANCED_TOLERANCE = 1e-6


@dataclass(frozen=True)
class EnergyValue:
    """Exact energy together with the method that produced it."""

    value: int
    method: str
    raw: Optional[float] = None

    def __int__(self):
        """The exact value."""
        return self.value


def _count_equal_pairs(values):
    # #{(i, j) : values[i] == values[j]} by blocked comparison
    total = 0
    rows = max(1, PAIR_BLOCK // max(1, values.size))
    for start in range(0, values.size, rows):
        chunk = values[start : start + rows]
        total += int(np.count_nonzero(chunk[:, None] == values[None, :]))
    return total


def additive_energy(field, A, B=None, method="convolution"):
    """
    Common additive energy E+(A, B) = sum_x r_{A+B}(x)^2.

    Parameters
    ----------
    field : PrimeField
    A : FpSet
    B : FpSet, optional
        defaults to A.
    method : str, optional
        'brute' (quadruple enumeration), 'convolution' (squares of
        rep_add counts) or 'fourier' ((1/p) sum |A^|^2 |B^|^2, rounded).

    Returns
    -------
    EnergyValue

    """
    B = A if B is None else B
    if A.is_empty() or B.is_empty():
        raise EmptySet("additive energy needs nonempty sets")
    if method == "brute":
        work = (A.size * B.size) ** 2
        if work > ADDITIVE_BRUTE_LIMIT:
            raise TooLargeForBrute(f"|A|^2|B|^2 = {work} > {ADDITIVE_BRUTE_LIMIT}")
        sums = (np.add.outer(A.elements, B.elements) % field.p).ravel()
        return EnergyValue(_count_equal_pairs(sums), method)
    if method == "convolution":
        return EnergyValue(rep_add(field, A, B, "plus").moment(2), method)
    if method == "fourier":
        ta = fourier_table(field, A)
        tb = ta if B is A else fourier_table(field, B)
        raw = float(np.sum(ta.mag2 * tb.mag2)) / field.p
        return EnergyValue(int(round(raw)), method, raw)
    raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")


def additive_energy_identity(field, A, B):
    """
    The three equal forms of E+(A, B).

    Returns
    -------
    tuple of int
        (sum r_{A+B}^2, sum r_{A-B}^2, sum r_{A-A} r_{B-B}).

    """
    plus = rep_add(field, A, B, "plus").moment(2)
    minus = rep_add(field, A, B, "minus").moment(2)
    daa = rep_add(field, A, A, "minus").counts.astype(object)
    dbb = rep_add(field, B, B, "minus").counts.astype(object)
    return plus, minus, int(sum(daa * dbb))


def balanced_additive_energy_fraction(field, A):
    """E+(f_A) = E+(A) - |A|^4 / p as an exact Fraction."""
    if A.is_empty():
        raise EmptySet("balanced energy needs a nonempty set")
    energy = additive_energy(field, A).value
    return Fraction(energy) - Fraction(A.size**4, field.p)


def balanced_additive_energy(field, A, table=None):
    """
    Additive energy of the balanced function f_A = A - |A|/p.

    Computed exactly as E+(A) - |A|^4/p and cross-checked against
    (1/p) sum_{xi != 0} |A^(xi)|^4.

    Parameters
    ----------
    field : PrimeField
    A : FpSet
        nonempty.
    table : FourierTable, optional
        reused transform of A.

    Returns
    -------
    float

    """
    exact = balanced_additive_energy_fraction(field, A)
    if table is None:
        table = fourier_table(field, A)
    fourier = float(np.sum(table.mag2[1:] ** 2)) / field.p
    scale = max(1.0, float(A.size) ** 3)
    if abs(fourier - float(exact)) > BALANCED_TOLERANCE * scale:
        logger = logging.getLogger(__name__)
        logger.warning(f"E+(f_A): Fourier {fourier:.12g} vs exact {float(exact):.12g}")
    return float(exact)


def _check_k(k):
    if k not in (1, 2, 3, 4):
        raise OutOfRange(f"k = {k}: only 1 <= k <= 4 is supported")


def mult_energy_k(field, R, k=2):
    """
    E_k^x(R) = sum_x r_{R/R}(x)^k via exponent convolution.

    Parameters
    ----------
    field : PrimeField
    R : FpSet
        0 not in R.
    k : int, optional
        moment 1..4. The default 2 is the multiplicative energy.

    Returns
    -------
    EnergyValue

    """
    _check_k(k)
    R.require_nonzero()
    return EnergyValue(rep_mul(field, R, R, "ratio").moment(k), "convolution")


def mult_energy_k_brute(field, R, k=2):
    """
    Oracle for mult_energy_k without discrete logarithms.

    k = 2 counts quadruples xy = zw; other k take moments of ratio counts
    built from field inverses.

    Returns
    -------
    EnergyValue

    """
    _check_k(k)
    R.require_nonzero()
    if R.size > MULT_BRUTE_MAX_SIZE:
        raise TooLargeForBrute(f"|R| = {R.size} > {MULT_BRUTE_MAX_SIZE}")
    if k == 2:
        products = (np.multiply.outer(R.elements, R.elements) % field.p).ravel()
        return EnergyValue(_count_equal_pairs(products), "brute")
    return EnergyValue(rep_mul_brute(field, R, R, "ratio").moment(k), "brute")


def mult_energy(field, A, B=None):
    """Common multiplicative energy E^x(A, B) = sum_x r_{AB}(x)^2."""
    B = A if B is None else B
    return EnergyValue(rep_mul(field, A, B, "product").moment(2), "convolution")


def sigma_mult(field, R):
    """
    sigma^x(R) = sum_{lam in R} r_{R/R}(lam).

    Returns
    -------
    EnergyValue

    """
    R.require_nonzero()
    if R.is_empty():
        return EnergyValue(0, "convolution")
    counts = rep_mul(field, R, R, "ratio").counts
    return EnergyValue(int(counts[R.exponents(field)].sum()), "convolution")


def sigma_mult_brute(field, R):
    """Triple count #{(lam, r1, r2) in R^3 : lam r2 = r1}."""
    R.require_nonzero()
    if R.size > MULT_BRUTE_MAX_SIZE:
        raise TooLargeForBrute(f"|R| = {R.size} > {MULT_BRUTE_MAX_SIZE}")
    images = np.multiply.outer(R.elements, R.elements) % field.p
    return EnergyValue(int(np.count_nonzero(R.bitmap[images])), "brute")


def difference_dilation_energy(field, A, R):
    """
    sum_y r_{(f_A - f_A)R}(y)^2 for the balanced function f_A.

    With g(y) = r_{A-A}(y) - |A|^2/p the balanced autocorrelation,
    r_{(f_A - f_A)R}(y) = sum_{lam in R} g(y / lam).

    Parameters
    ----------
    field : PrimeField
    A : FpSet
    R : FpSet
        0 not in R.

    Returns
    -------
    float

    """
    R.require_nonzero()
    g = rep_add(field, A, A, "minus").counts - A.size**2 / field.p
    inverses = field.inverse_table()[R.elements]
    y = np.arange(field.p, dtype=np.int64)
    weight = np.zeros(field.p, dtype=np.float64)
    for inv in inverses:
        weight += g[(y * inv) % field.p]
    return float(np.sum(weight**2))
