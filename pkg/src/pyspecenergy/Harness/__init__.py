# __init__ - package initialization for Harness
#
"""
Harness: one verification routine per statement, sweeps and baselines.

======================================================================

Modules
-------

    report      --- TheoremReport record and CSV / JSON-lines emission.
    families    --- set families for sweeps.
    theorems    --- verify_* routines.
    sweepconfig --- flat key-value sweep configuration.
    baseline    --- blessed max-ratio baselines.
    sweep       --- cross-product runner.
    selftest    --- exact-identity suite.
"""
