"""Subsets of F_p held as a membership bitmap and a sorted element list."""
import numpy as np

# Our imports
from pyspecenergy.errors import OutOfRange, ZeroInSet


class FpSet:
    """Define an unweighted subset of F_p."""

    def __init__(self, p, elements=(), reduce=False):
        """
        Construct the set from an iterable of residues.

        Parameters
        ----------
        p : int
            field modulus.
        elements : iterable of int
            members; repetitions are collapsed.
        reduce : bool, optional
            reduce members mod p instead of rejecting values outside
            [0, p - 1]. The default is False.

        Returns
        -------
        None.

        """
        self.p = int(p)
        values = np.asarray(list(elements) if not isinstance(elements, np.ndarray) else elements)
        values = values.astype(np.int64).ravel()
        if reduce:
            values = values % self.p
        elif values.size and (values.min() < 0 or values.max() >= self.p):
            raise OutOfRange(f"elements must lie in [0, {self.p - 1}]")

        bitmap = np.zeros(self.p, dtype=bool)
        bitmap[values] = True
        self._set_bitmap(bitmap)

    @classmethod
    def from_bitmap(cls, bitmap):
        """Build a set directly from a length-p boolean membership array."""
        obj = cls.__new__(cls)
        obj.p = int(len(bitmap))
        obj._set_bitmap(np.asarray(bitmap, dtype=bool).copy())
        return obj

    def _set_bitmap(self, bitmap):
        self._bitmap = bitmap
        self._elements = np.flatnonzero(bitmap).astype(np.int64)
        self._bitmap.flags.writeable = False
        self._elements.flags.writeable = False
        self.size = int(self._elements.size)

    def __repr__(self):
        """Print the object purpose."""
        shown = ", ".join(str(x) for x in self._elements[:8])
        more = ", ..." if self.size > 8 else ""
        return f"FpSet(p={self.p}, size={self.size}, {{{shown}{more}}})"

    def __len__(self):
        """Cardinality."""
        return self.size

    def __iter__(self):
        """Iterate over members in increasing order as Python ints."""
        return (int(x) for x in self._elements)

    def __contains__(self, x):
        """Membership of the residue x mod p."""
        return bool(self._bitmap[int(x) % self.p])

    def __eq__(self, other):
        """Equal when modulus and members agree."""
        if not isinstance(other, FpSet):
            return NotImplemented
        return self.p == other.p and np.array_equal(self._bitmap, other._bitmap)

    def __hash__(self):
        """Hash on modulus and members."""
        return hash((self.p, self._elements.tobytes()))

    @property
    def bitmap(self):
        """Read-only boolean membership array of length p."""
        return self._bitmap

    @property
    def elements(self):
        """Read-only sorted int64 array of members."""
        return self._elements

    def indicator(self, dtype=np.float64):
        """Indicator function as a length-p array of the given dtype."""
        return self._bitmap.astype(dtype)

    def to_list(self):
        """Members as a sorted list of Python ints."""
        return [int(x) for x in self._elements]

    def is_empty(self):
        """True for the empty set."""
        return self.size == 0

    def has_zero(self):
        """True when 0 is a member."""
        return bool(self._bitmap[0])

    def require_nonzero(self, what="set"):
        """Raise ZeroInSet when 0 is a member."""
        if self.has_zero():
            raise ZeroInSet(f"{what} contains 0; multiplicative operations need 0 not in A")

    def without_zero(self):
        """The set minus {0}."""
        bitmap = self._bitmap.copy()
        bitmap[0] = False
        return FpSet.from_bitmap(bitmap)

    def negate(self):
        """The set -A."""
        return FpSet(self.p, (-self._elements) % self.p)

    def dilate(self, lam):
        """The set lam * A."""
        return FpSet(self.p, (self._elements * (int(lam) % self.p)) % self.p)

    def shift(self, t):
        """The set A + t."""
        return FpSet(self.p, (self._elements + int(t)) % self.p)

    def intersection(self, other):
        """A intersected with another set over the same field."""
        return FpSet.from_bitmap(self._bitmap & other.bitmap)

    def issubset(self, other):
        """True when every member lies in other."""
        return bool(np.all(other.bitmap[self._elements]))

    def exponents(self, field):
        """
        Discrete logarithms of the members.

        Parameters
        ----------
        field : PrimeField
            field supplying the dlog table.

        Returns
        -------
        numpy.ndarray
            sorted exponents in [0, p - 2].

        """
        self.require_nonzero()
        return np.sort(field.dlog_table[self._elements])

    def exponent_indicator(self, field):
        """Indicator of the exponent set as a length p - 1 float array."""
        ind = np.zeros(field.order, dtype=np.float64)
        ind[self.exponents(field)] = 1.0
        return ind

    @property
    def density(self):
        """delta = |A| / p."""
        return self.size / self.p
