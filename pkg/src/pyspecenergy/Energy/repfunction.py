"""
Representation functions.

r_{A+B}, r_{A-B} live on F_p; r_{AB}, r_{A/B} are stored on exponents
mod p - 1 and read back through the pow table.
"""
import csv

import numpy as np

# Our imports
from pyspecenergy.Energy.convolution import cyclic_convolve, reflect
from pyspecenergy.errors import TooLargeForBrute, ZeroInSet

ADDITIVE = "additive"
MULTIPLICATIVE = "multiplicative"

# oracle guard on |A||B| for pair enumeration
BRUTE_PAIR_LIMIT = 10**6


class RepFunction:
    """Define an exact nonnegative integer function on F_p or Z/(p - 1)."""

    def __init__(self, domain, counts, p):
        """
        Wrap a dense count array.

        Parameters
        ----------
        domain : str
            ADDITIVE (indexed by x in F_p) or MULTIPLICATIVE (indexed by
            exponent e, value at g^e).
        counts : numpy.ndarray
            nonnegative integer counts.
        p : int
            field modulus.

        Returns
        -------
        None.

        """
        if domain not in (ADDITIVE, MULTIPLICATIVE):
            raise ValueError(f"unknown domain {domain!r}")
        counts = np.asarray(counts, dtype=np.int64)
        expected = p if domain == ADDITIVE else p - 1
        if counts.size != expected:
            raise ValueError(f"{domain} counts need length {expected}, got {counts.size}")
        if counts.size and counts.min() < 0:
            raise ValueError("representation counts must be nonnegative")
        self.domain = domain
        self.p = int(p)
        self.counts = counts
        self.counts.flags.writeable = False
        self.total = int(counts.sum())

    def __repr__(self):
        """Print the object purpose."""
        s = f"RepFunction({self.domain}, p={self.p}, total={self.total})\n"
        return s

    def moment(self, k):
        """
        Exact sum of r(x)^k over the domain.

        Parameters
        ----------
        k : int
            moment order, k >= 0.

        Returns
        -------
        int
            Python integer (unbounded width).

        """
        nonzero = self.counts[self.counts > 0].astype(object)
        if k == 0:
            return int(nonzero.size)
        return int(sum(nonzero**k))

    def at(self, x, field=None):
        """Value r(x); multiplicative functions need the field for dlog."""
        if self.domain == ADDITIVE:
            return int(self.counts[int(x) % self.p])
        if field is None:
            raise ValueError("multiplicative lookup needs the field")
        return int(self.counts[field.dlog(x)])

    def field_counts(self, field):
        """
        Counts indexed by field element.

        Returns
        -------
        numpy.ndarray
            length-p int64 array; multiplicative counts placed at g^e,
            with 0 at index 0.

        """
        if self.domain == ADDITIVE:
            return self.counts.copy()
        out = np.zeros(self.p, dtype=np.int64)
        out[field.pow_table] = self.counts
        return out

    def support(self, field=None):
        """Sorted field elements where r is positive."""
        if self.domain == ADDITIVE:
            return np.flatnonzero(self.counts)
        if field is None:
            raise ValueError("multiplicative support needs the field")
        return np.sort(field.pow_table[np.flatnonzero(self.counts)])

    def write_csv(self, filename):
        """
        Export (index, count) rows.

        Parameters
        ----------
        filename : str
            target CSV file; index is x for additive and e for
            multiplicative functions.

        Returns
        -------
        None.

        """
        with open(filename, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["index", "count"])
            for index, count in enumerate(self.counts):
                writer.writerow([index, int(count)])


def _check_sign(sign):
    if sign not in ("plus", "minus"):
        raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")


def rep_add(field, A, B, sign="plus"):
    """
    r_{A+B} or r_{A-B} by length-p cyclic convolution.

    Parameters
    ----------
    field : PrimeField
    A, B : FpSet
    sign : str
        'plus' or 'minus'.

    Returns
    -------
    RepFunction
        counts[x] = #{(a, b) : a +- b = x}.

    """
    _check_sign(sign)
    fb = B.indicator()
    if sign == "minus":
        fb = reflect(fb)
    counts = cyclic_convolve(A.indicator(), fb)
    return RepFunction(ADDITIVE, counts, field.p)


def rep_add_brute(field, A, B, sign="plus"):
    """Pair enumeration oracle for rep_add, |A||B| <= BRUTE_PAIR_LIMIT."""
    _check_sign(sign)
    if A.size * B.size > BRUTE_PAIR_LIMIT:
        raise TooLargeForBrute(f"|A||B| = {A.size * B.size} > {BRUTE_PAIR_LIMIT}")
    b = B.elements if sign == "plus" else -B.elements
    values = np.add.outer(A.elements, b) % field.p
    counts = np.bincount(values.ravel(), minlength=field.p)
    return RepFunction(ADDITIVE, counts, field.p)


def rep_mul(field, A, B, op="ratio"):
    """
    r_{AB} or r_{A/B} on exponents via length p - 1 cyclic convolution.

    Parameters
    ----------
    field : PrimeField
    A, B : FpSet
        sets avoiding 0.
    op : str
        'product' or 'ratio'.

    Returns
    -------
    RepFunction
        counts[e] = #{(a, b) : dlog(a) +- dlog(b) = e mod p - 1}.

    """
    if op not in ("product", "ratio"):
        raise ValueError(f"op must be 'product' or 'ratio', got {op!r}")
    if A.has_zero() or B.has_zero():
        raise ZeroInSet(f"{op}: both sets must avoid 0")
    fb = B.exponent_indicator(field)
    if op == "ratio":
        fb = reflect(fb)
    counts = cyclic_convolve(A.exponent_indicator(field), fb)
    return RepFunction(MULTIPLICATIVE, counts, field.p)


def rep_mul_brute(field, A, B, op="ratio"):
    """Pair enumeration oracle for rep_mul using field products and inverses."""
    if op not in ("product", "ratio"):
        raise ValueError(f"op must be 'product' or 'ratio', got {op!r}")
    if A.has_zero() or B.has_zero():
        raise ZeroInSet(f"{op}: both sets must avoid 0")
    if A.size * B.size > BRUTE_PAIR_LIMIT:
        raise TooLargeForBrute(f"|A||B| = {A.size * B.size} > {BRUTE_PAIR_LIMIT}")
    b = B.elements
    if op == "ratio":
        b = field.inverse_table()[b]
    values = np.multiply.outer(A.elements, b) % field.p
    by_element = np.bincount(values.ravel(), minlength=field.p)
    return RepFunction(MULTIPLICATIVE, by_element[field.pow_table], field.p)
