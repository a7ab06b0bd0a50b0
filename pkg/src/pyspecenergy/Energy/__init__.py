# __init__ - package initialization for Energy
#
"""
Energy: representation functions and exact energy counts.

=========================================================

Modules
-------

    convolution --- cyclic convolution with integrality check.
    repfunction --- RepFunction, r_{A+B}, r_{A-B}, r_{AB}, r_{A/B}.
    energies    --- additive, balanced and multiplicative energies.
    c4          --- C4 aggregates (intersections of dilates).
"""
