# __init__ - package initialization for Incidence
#
"""
Incidence: weighted point/plane and point/line incidence counting.

=================================================================

Modules
-------

    scene      --- IncidenceScene and scene builders.
    incidences --- incidence sums, Vinh check, collinearity, ratio reports.
    sceneio    --- scene file format, header "q=<q> dim=<2|3>".
"""
