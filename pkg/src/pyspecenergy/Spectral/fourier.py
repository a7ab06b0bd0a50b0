"""
Fourier transform of sets over F_p and the large spectrum.

A^(xi) = sum_{a in A} e(-xi a), e(x) = exp(2 pi i x / p). The direct path
evaluates the sum; the fast path is a chirp (Bluestein) reduction of the
prime-length transform to a power-of-two convolution.
"""
import csv
import logging
from dataclasses import dataclass
from math import sqrt

import numpy as np
from scipy import fft

# Our imports
from pyspecenergy.errors import BadEpsilon, EmptySet

# relative band applied toward inclusion at the spectrum threshold
THRESHOLD_BAND = 1e-9
PARSEVAL_TOLERANCE = 1e-9
# auto method switches to the chirp transform above this modulus
DIRECT_MAX_PRIME = 1009
# entries of the phase matrix evaluated per block in dft_direct
DIRECT_BLOCK = 1 << 20


class FourierTable:
    """Define the per-frequency values of A^ and |A^|^2."""

    def __init__(self, p, values, source_size):
        """
        Store a transform, enforcing the exact symmetries.

        Parameters
        ----------
        p : int
            modulus.
        values : numpy.ndarray
            complex A^(xi), xi = 0..p-1.
        source_size : int
            |A|.

        Returns
        -------
        None.

        """
        values = np.array(values, dtype=np.complex128)
        half = (p - 1) // 2
        values[0] = float(source_size)
        # conjugate symmetry held exactly as stored
        values[p - half :] = np.conj(values[1 : half + 1])[::-1]
        self.p = int(p)
        self.source_size = int(source_size)
        self.values = values
        self.mag2 = values.real**2 + values.imag**2
        self.values.flags.writeable = False
        self.mag2.flags.writeable = False

        defect = self.parseval_defect()
        if defect > PARSEVAL_TOLERANCE:
            logger = logging.getLogger(__name__)
            logger.warning(f"Parseval defect {defect:.3g} for p={p}, |A|={source_size}")

    def __repr__(self):
        """Print the object purpose."""
        s = f"FourierTable(p={self.p}, |A|={self.source_size})\n"
        return s

    def parseval_defect(self):
        """Relative error of sum |A^|^2 = p |A| (absolute when A is empty)."""
        expected = self.p * self.source_size
        err = abs(float(np.sum(self.mag2)) - expected)
        return err / expected if expected else err

    def magnitudes(self):
        """|A^(xi)| for all xi."""
        return np.sqrt(self.mag2)

    def max_nonzero_magnitude(self):
        """max over r != 0 of |A^(r)|."""
        return float(np.sqrt(np.max(self.mag2[1:])))

    def write_csv(self, filename):
        """
        Export rows (xi, re, im, mag2) with 12 significant digits.

        Parameters
        ----------
        filename : str
            target CSV file.

        Returns
        -------
        None.

        """
        with open(filename, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["xi", "re", "im", "mag2"])
            for xi in range(self.p):
                v = self.values[xi]
                writer.writerow(
                    [xi, f"{v.real:.12g}", f"{v.imag:.12g}", f"{self.mag2[xi]:.12g}"]
                )


@dataclass(frozen=True)
class SpectrumResult:
    """Spec_eps(A) with the magnitudes of its members."""

    eps: float
    threshold: float
    elements: tuple
    magnitudes: tuple
    p: int
    source_size: int

    def __len__(self):
        """Size of the spectrum."""
        return len(self.elements)

    def nonzero(self):
        """Spec_eps(A) minus {0} as a sorted tuple."""
        return tuple(r for r in self.elements if r != 0)

    def write_csv(self, filename):
        """Export rows (r, magnitude) with 12 significant digits."""
        with open(filename, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["r", "magnitude"])
            for r, m in zip(self.elements, self.magnitudes):
                writer.writerow([r, f"{m:.12g}"])


def dft_direct(field, A):
    """
    Evaluate A^(xi) for every xi by summation, O(p |A|).

    Phases use the exact residue xi*a mod p, so each entry is a fixed
    order sum of tabulated roots of unity.

    Parameters
    ----------
    field : PrimeField
    A : FpSet

    Returns
    -------
    FourierTable

    """
    p = field.p
    roots = np.exp(-2j * np.pi * np.arange(p) / p)
    values = np.zeros(p, dtype=np.complex128)
    elements = A.elements
    if elements.size:
        rows = max(1, DIRECT_BLOCK // elements.size)
        for start in range(0, p, rows):
            xi = np.arange(start, min(p, start + rows), dtype=np.int64)
            phase = np.multiply.outer(xi, elements) % p
            values[start : start + xi.size] = roots[phase].sum(axis=1)
    return FourierTable(p, values, A.size)


def chirp_dft(x):
    """
    Prime-length DFT X[k] = sum_n x[n] exp(-2 pi i n k / N) via a chirp.

    nk = (n^2 + k^2 - (k - n)^2) / 2 turns the transform into a
    convolution with the chirp w[n] = exp(-pi i n^2 / N), evaluated with
    power-of-two FFTs. n^2 is reduced mod 2N before the exponential.

    Parameters
    ----------
    x : numpy.ndarray
        complex input of length N.

    Returns
    -------
    numpy.ndarray
        the DFT of x.

    """
    x = np.asarray(x, dtype=np.complex128)
    if x.ndim != 1:
        raise ValueError("Data must be 1-dimensional")
    n_len = x.size
    n = np.arange(n_len, dtype=np.int64)
    chirp = np.exp(-1j * np.pi * ((n * n) % (2 * n_len)) / n_len)

    nfft = 1 << (2 * n_len - 2).bit_length()
    kernel = np.zeros(nfft, dtype=np.complex128)
    kernel[:n_len] = np.conj(chirp)
    kernel[nfft - n_len + 1 :] = np.conj(chirp[1:])[::-1]

    y = fft.ifft(fft.fft(x * chirp, nfft) * fft.fft(kernel))
    return y[:n_len] * chirp


def dft_fast(field, A):
    """
    Same contract as dft_direct in O(p log p) through chirp_dft.

    Parameters
    ----------
    field : PrimeField
    A : FpSet

    Returns
    -------
    FourierTable

    """
    return FourierTable(field.p, chirp_dft(A.indicator(np.complex128)), A.size)


def fourier_table(field, A, method="auto"):
    """
    Transform A with the requested method.

    Parameters
    ----------
    method : str, optional
        'direct', 'fast' or 'auto' (direct up to DIRECT_MAX_PRIME).

    Returns
    -------
    FourierTable

    """
    if method == "auto":
        method = "direct" if field.p <= DIRECT_MAX_PRIME else "fast"
    if method == "direct":
        return dft_direct(field, A)
    if method == "fast":
        return dft_fast(field, A)
    raise ValueError(f"unknown transform method {method!r}")


def spectrum(table, eps):
    """
    Spec_eps(A) = {r : |A^(r)| >= eps |A|}.

    Parameters
    ----------
    table : FourierTable
    eps : float
        threshold in (0, 1].

    Returns
    -------
    SpectrumResult
        members sorted, threshold band 1e-9 toward inclusion.

    """
    if not 0.0 < eps <= 1.0:
        raise BadEpsilon(f"eps = {eps} outside (0, 1]")
    if table.source_size == 0:
        raise EmptySet("spectrum of the empty set is undefined")
    threshold = eps * table.source_size
    mags = table.magnitudes()
    members = np.flatnonzero(mags >= threshold * (1.0 - THRESHOLD_BAND))
    return SpectrumResult(
        eps=float(eps),
        threshold=float(threshold),
        elements=tuple(int(r) for r in members),
        magnitudes=tuple(float(m) for m in mags[members]),
        p=table.p,
        source_size=table.source_size,
    )


def spectrum_size_bound(table, eps):
    """Parseval bound p / (|A| eps^2) = 1 / (delta eps^2)."""
    return table.p / (table.source_size * eps * eps)


def balanced_mag2(table):
    """
    |f_A^(xi)|^2 for the balanced function f_A = A - |A|/p.

    Returns
    -------
    numpy.ndarray
        mag2 with the zero frequency set to 0.

    """
    out = np.array(table.mag2, dtype=np.float64)
    out[0] = 0.0
    return out


def max_over_sqrt_p(table):
    """max_{r != 0} |A^(r)| / sqrt(p)."""
    return table.max_nonzero_magnitude() / sqrt(table.p)
