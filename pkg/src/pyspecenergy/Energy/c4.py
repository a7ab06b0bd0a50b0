"""
C4 aggregates.

C_4(A)(alpha, beta, gamma) = |A n alpha A n beta A n gamma A|. Only
alpha, beta, gamma in A/A give nonzero values, so the sums run over the
ratio set with A n alpha A held as rows of a boolean matrix.
"""
import itertools

import numpy as np

# Our imports
from pyspecenergy.errors import TooLargeForBrute

# guard for the ratio-triple enumeration
C4_MAX_SIZE = 32
# guard for the literal definition over all of (F_p*)^3
C4_DEFINITION_MAX_CELLS = 2 * 10**6


def _dilate_rows(field, A):
    # row for each alpha in A/A: membership of a in alpha A, a in A
    inverse = field.inverse_table()
    ratios = np.unique(np.multiply.outer(A.elements, inverse[A.elements]) % field.p)
    # a in alpha A  <=>  a / alpha in A
    rows = A.bitmap[np.multiply.outer(inverse[ratios], A.elements) % field.p]
    return ratios, rows


def c4_aggregates(field, A):
    """
    Sum and square-sum of C_4(A) over all (alpha, beta, gamma).

    Parameters
    ----------
    field : PrimeField
    A : FpSet
        0 not in A, |A| <= C4_MAX_SIZE.

    Returns
    -------
    tuple of int
        (sum C_4, sum C_4^2); the first is |A|^4, the second E_4^x(A).

    """
    A.require_nonzero()
    if A.size > C4_MAX_SIZE:
        raise TooLargeForBrute(f"|A| = {A.size} > {C4_MAX_SIZE}")
    if A.is_empty():
        return 0, 0
    _, rows = _dilate_rows(field, A)
    weights = rows.astype(np.float64)
    total = 0
    total_sq = 0
    for row in rows:
        pair = weights * row  # A n alpha A n beta A, one row per beta
        # counts are small integers, exact in float64
        block = np.rint(pair @ weights.T).astype(np.int64)
        total += int(block.sum())
        total_sq += int((block * block).sum())
    return total, total_sq


def c4_aggregates_brute(field, A):
    """
    Literal definition over all (alpha, beta, gamma) in (F_p*)^3.

    Only usable for tiny p; guards (p - 1)^3 <= C4_DEFINITION_MAX_CELLS.

    Returns
    -------
    tuple of int

    """
    A.require_nonzero()
    cells = field.order**3
    if cells > C4_DEFINITION_MAX_CELLS:
        raise TooLargeForBrute(f"(p - 1)^3 = {cells} > {C4_DEFINITION_MAX_CELLS}")
    dilates = [A.dilate(alpha).bitmap for alpha in range(1, field.p)]
    total = 0
    total_sq = 0
    for a, b, c in itertools.product(range(field.order), repeat=3):
        value = int(np.count_nonzero(A.bitmap & dilates[a] & dilates[b] & dilates[c]))
        total += value
        total_sq += value * value
    return total, total_sq
