"""Cyclic convolution of integer-valued arrays through scipy.fft."""
import logging

import numpy as np
from scipy import fft

# Our imports
from pyspecenergy.errors import ConvolutionPrecisionError

# largest accepted distance from an integer before aborting
INTEGRALITY_TOLERANCE = 1e-3


def round_to_integers(values, what="convolution"):
    """
    Round float counts, verifying they were integers up to tolerance.

    Parameters
    ----------
    values : numpy.ndarray
        real array expected to hold integers.
    what : str, optional
        label for the error message.

    Returns
    -------
    numpy.ndarray
        int64 array of rounded values.

    """
    rounded = np.rint(values)
    if values.size:
        defect = float(np.max(np.abs(values - rounded)))
        if defect > INTEGRALITY_TOLERANCE:
            raise ConvolutionPrecisionError(
                f"{what}: output {defect:.3g} away from an integer"
            )
        logging.getLogger(__name__).debug(f"{what}: integrality defect {defect:.3g}")
    return rounded.astype(np.int64)


def cyclic_convolve(f, g):
    """
    Cyclic convolution h(x) = sum_y f(y) g(x - y) over Z/nZ.

    Parameters
    ----------
    f, g : array_like
        integer-valued arrays of the same length n.

    Returns
    -------
    numpy.ndarray
        int64 array of length n, exact after the integrality check.

    """
    f = np.asarray(f, dtype=np.float64)
    g = np.asarray(g, dtype=np.float64)
    n = f.size
    if g.size != n:
        raise ValueError(f"length mismatch {n} != {g.size}")
    h = fft.irfft(fft.rfft(f) * fft.rfft(g), n=n)
    return round_to_integers(h)


def reflect(f):
    """Return x -> f(-x) on Z/nZ."""
    f = np.asarray(f)
    return np.roll(f[::-1], 1)
