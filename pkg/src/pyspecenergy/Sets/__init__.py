# __init__ - package initialization for Sets
#
"""
Sets: subsets of F_p and the families used by the theorem harness.

==================================================================

Modules
-------

    fpset        --- FpSet, the bitmap/sorted-list set type.
    constructors --- intervals, random sets, subgroups, cosets, AA and A+A.
    setio        --- set file format, header "p=<p>".
"""
