# __init__ - top level package initialization for pyspecenergy
#
"""
pyspecenergy: spectra, energies and incidences over prime fields.

================================================================

Package depends on numpy, scipy and sympy.

Contents
--------
pyspecenergy provides the following sub-packages:

Modules
-------

    FieldArithmetic --- Prime field, primitive root, discrete logarithm tables.
    Sets            --- Subsets of F_p, set families, sum and product sets.
    Spectral        --- Fourier transform of sets and the large spectrum.
    Energy          --- Representation functions and exact energies.
    Incidence       --- Weighted point/plane and point/line incidences.
    Harness         --- Theorem verification reports, sweeps, baselines.
    cli             --- Command line front end.
"""

import logging

from ._version import version as __version__

__all__ = ("__version__",)

# Ensure base logger for package follows Python recommendation
logging.getLogger(__name__).addHandler(logging.NullHandler())
