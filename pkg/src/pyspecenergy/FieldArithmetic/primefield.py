"""
Prime field arithmetic.

Primitive root discovery and dense discrete logarithm tables, turning
multiplicative structure of F_p* into additive structure mod p - 1.
"""
import logging
from functools import lru_cache

import numpy as np

# Third-party imports
import sympy

# Our imports
from pyspecenergy.errors import EvenPrime, NotPrime, OutOfRange, ZeroElement

# dense tables hold two int64 words per element
MAX_TABLE_PRIME = 100_000_000


def smallest_primitive_root(p):
    """
    Return the smallest positive primitive root modulo the odd prime p.

    Parameters
    ----------
    p : int
        odd prime.

    Returns
    -------
    int
        smallest g with multiplicative order p - 1.

    """
    order = p - 1
    factors = sympy.primefactors(order)
    for candidate in range(2, p):
        for factor in factors:
            if pow(candidate, order // factor, p) == 1:
                break
        else:
            return candidate
    return 1  # p = 2 only, excluded upstream


class PrimeField:
    """Define the prime field F_p with its discrete logarithm tables."""

    def __init__(self, p):
        """
        Construct the field and build pow/dlog tables.

        Parameters
        ----------
        p : int
            odd prime modulus, p >= 3.

        Returns
        -------
        None.

        """
        if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
            raise NotPrime(f"modulus must be an integer, got {p!r}")
        p = int(p)
        if p == 2:
            raise EvenPrime("p = 2: an odd prime is required")
        if p < 3 or not sympy.isprime(p):
            raise NotPrime(f"{p} is not prime")
        if p > MAX_TABLE_PRIME:
            raise OutOfRange(f"p = {p} exceeds the dense table limit {MAX_TABLE_PRIME}")

        self.p = p
        self.order = p - 1
        self.g = smallest_primitive_root(p)

        self._pow = self._build_pow_table()
        self._dlog = np.full(p, -1, dtype=np.int64)
        self._dlog[self._pow] = np.arange(self.order, dtype=np.int64)
        self._pow.flags.writeable = False
        self._dlog.flags.writeable = False

        logger = logging.getLogger(__name__)
        logger.debug(f"built F_{p} with primitive root {self.g}")

    def __repr__(self):
        """Print the object purpose."""
        s = f"PrimeField(p={self.p}, g={self.g}): dlog/pow tables over F_p*.\n"
        return s

    def __eq__(self, other):
        """Fields are equal when their moduli agree."""
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        """Hash on the modulus."""
        return hash(("PrimeField", self.p))

    def _build_pow_table(self):
        # doubling: the second half is the first half times g^len
        table = np.ones(1, dtype=np.int64)
        while table.size < self.order:
            step = pow(self.g, int(table.size), self.p)
            table = np.concatenate((table, table * step % self.p))
        return table[: self.order].copy()

    @property
    def pow_table(self):
        """Read-only table e -> g^e for e in [0, p - 2]."""
        return self._pow

    @property
    def dlog_table(self):
        """Read-only table x -> dlog(x); entry 0 holds the sentinel -1."""
        return self._dlog

    def dlog(self, x):
        """
        Discrete logarithm of a nonzero field element.

        Parameters
        ----------
        x : int
            field element, reduced mod p.

        Returns
        -------
        int
            e in [0, p - 2] with g^e = x (mod p).

        """
        x = int(x) % self.p
        if x == 0:
            raise ZeroElement("dlog(0) is undefined")
        return int(self._dlog[x])

    def power(self, e):
        """Return g^e mod p for any integer e."""
        return int(self._pow[int(e) % self.order])

    def inverse(self, x):
        """Return the multiplicative inverse of a nonzero element."""
        x = int(x) % self.p
        if x == 0:
            raise ZeroElement("0 has no inverse")
        return pow(x, self.p - 2, self.p)

    def inverse_table(self):
        """
        Inverses of all elements as an array.

        Returns
        -------
        numpy.ndarray
            inv[x] = x^-1 for x != 0, inv[0] = 0.

        """
        inv = np.zeros(self.p, dtype=np.int64)
        inv[self._pow] = self._pow[(-np.arange(self.order)) % self.order]
        return inv


@lru_cache(maxsize=32)
def make_field(p):
    """
    Build (or fetch the cached) field F_p.

    Parameters
    ----------
    p : int
        odd prime modulus.

    Returns
    -------
    PrimeField
        immutable field with verified primality and complete tables.

    """
    return PrimeField(p)


def dlog(field, x):
    """Discrete logarithm of x in field, see PrimeField.dlog."""
    return field.dlog(x)
