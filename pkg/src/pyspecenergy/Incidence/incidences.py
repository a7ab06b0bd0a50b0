"""
Incidence counting and the empirical checks built on it.

All counts are brute force over (point, surface) pairs, blocked over
points; weighted sums accumulate block by block in a fixed order.
"""
from dataclasses import dataclass
from math import sqrt

import numpy as np

# Our imports
from pyspecenergy.errors import (
    MeanZeroViolated,
    PreconditionError,
    SizeOrder,
    TooLargeForBrute,
)
from pyspecenergy.FieldArithmetic.primefield import make_field
from pyspecenergy.Incidence.scene import normalize_surfaces

MEAN_ZERO_TOLERANCE = 1e-9
VINH_BAND = 1e-9
# pair-hash collinearity guard
COLLINEAR_MAX_POINTS = 5000
# cubic oracle guard
COLLINEAR_BRUTE_MAX_POINTS = 100
# point rows per block of the incidence matrix
POINT_BLOCK = 4096


@dataclass(frozen=True)
class VinhReport:
    """Outcome of the mean-zero incidence bound."""

    lhs: float
    rhs: float
    passed: bool
    constant: float


@dataclass(frozen=True)
class RatioReport:
    """Excess incidences against the right-hand side of an incidence theorem."""

    incidences: int
    excess: float
    bound: float
    ratio: float
    collinear: int = 0


def _blocks(scene):
    normals = scene.surfaces[:, : scene.dim]
    offsets = scene.surfaces[:, scene.dim]
    for start in range(0, scene.num_points, POINT_BLOCK):
        pts = scene.points[start : start + POINT_BLOCK]
        yield start, (pts @ normals.T - offsets[None, :]) % scene.q == 0


def incidence_matrix(scene):
    """Boolean matrix I[i, j] = point i lies on surface j."""
    out = np.zeros((scene.num_points, scene.num_surfaces), dtype=bool)
    for start, block in _blocks(scene):
        out[start : start + block.shape[0]] = block
    return out


def incidences(scene):
    """
    Weighted incidence sum sum_{p, pi} I(p, pi) alpha(p) beta(pi).

    Parameters
    ----------
    scene : IncidenceScene

    Returns
    -------
    float
        integer valued for unit weights.

    """
    total = 0.0
    for start, block in _blocks(scene):
        alpha = scene.alpha[start : start + block.shape[0]]
        total += float(alpha @ (block.astype(np.float64) @ scene.beta))
    return total


def incidence_count(scene):
    """Unweighted number of incidences."""
    return sum(int(np.count_nonzero(block)) for _, block in _blocks(scene))


def check_vinh(scene):
    """
    Mean-zero bound |sum I alpha beta| <= q^((dim-1)/2) ||alpha|| ||beta||.

    For planes in F_q^3 the constant is q; for lines in F_q^2 it is
    sqrt(q). Requires sum alpha = 0 or sum beta = 0.

    Parameters
    ----------
    scene : IncidenceScene

    Returns
    -------
    VinhReport

    """
    mean_zero = (
        abs(float(scene.alpha.sum())) <= MEAN_ZERO_TOLERANCE
        or abs(float(scene.beta.sum())) <= MEAN_ZERO_TOLERANCE
    )
    if not mean_zero:
        raise MeanZeroViolated("neither sum(alpha) nor sum(beta) is zero")
    constant = scene.q ** ((scene.dim - 1) / 2)
    lhs = abs(incidences(scene))
    rhs = constant * float(np.linalg.norm(scene.alpha)) * float(np.linalg.norm(scene.beta))
    return VinhReport(lhs, rhs, lhs <= rhs * (1.0 + VINH_BAND), constant)


def _normalize_rows(q, rows, inverse):
    nonzero = rows != 0
    lead = rows[np.arange(rows.shape[0]), np.argmax(nonzero, axis=1)]
    return rows * inverse[lead][:, None] % q


def collinear_max(points, q):
    """
    Maximum number of collinear points, by hashing pair directions.

    Parameters
    ----------
    points : array_like
        distinct points of F_q^2 or F_q^3, shape (n, dim).
    q : int

    Returns
    -------
    int

    """
    pts = np.asarray(points, dtype=np.int64)
    n = pts.shape[0]
    if n > COLLINEAR_MAX_POINTS:
        raise TooLargeForBrute(f"{n} points > {COLLINEAR_MAX_POINTS}")
    if n <= 2:
        return n
    inverse = make_field(q).inverse_table()
    weights = q ** np.arange(pts.shape[1], dtype=np.int64)
    best = 2
    for i in range(n - 1):
        directions = _normalize_rows(q, (pts[i + 1 :] - pts[i]) % q, inverse)
        _, counts = np.unique(directions @ weights, return_counts=True)
        best = max(best, int(counts.max()) + 1)
    return best


def collinear_max_brute(points, q):
    """Cubic oracle: for each pair, count points on the line through it."""
    pts = np.asarray(points, dtype=np.int64)
    n = pts.shape[0]
    if n > COLLINEAR_BRUTE_MAX_POINTS:
        raise TooLargeForBrute(f"{n} points > {COLLINEAR_BRUTE_MAX_POINTS}")
    if n <= 2:
        return n
    best = 2
    for i in range(n):
        offsets = (pts - pts[i]) % q
        for j in range(i + 1, n):
            d = offsets[j]
            if pts.shape[1] == 2:
                cross = (offsets[:, 0] * d[1] - offsets[:, 1] * d[0]) % q
                on_line = cross == 0
            else:
                on_line = np.all(np.cross(offsets, d) % q == 0, axis=1)
            best = max(best, int(np.count_nonzero(on_line)))
    return best


def misha_ratio(scene, dual=False):
    """
    Excess point/plane incidences against |P|^(1/2)|Pi| + k|P|.

    Parameters
    ----------
    scene : IncidenceScene
        dim 3, weights ignored (unit weight count).
    dual : bool, optional
        when |P| > |Pi|, evaluate on the dual scene instead of failing.

    Returns
    -------
    RatioReport
        excess = I - |P||Pi|/q, ratio = excess / bound (may be negative).

    """
    if scene.dim != 3:
        raise PreconditionError("point/plane ratio needs a dim 3 scene")
    if scene.num_points > scene.num_surfaces:
        if not dual:
            raise PreconditionError(
                f"|P| = {scene.num_points} > |Pi| = {scene.num_surfaces}; pass dual=True"
            )
        scene = scene.dual()
    n_p, n_s = scene.num_points, scene.num_surfaces
    count = incidence_count(scene)
    k = collinear_max(scene.points, scene.q)
    excess = count - n_p * n_s / scene.q
    bound = sqrt(n_p) * n_s + k * n_p
    ratio = excess / bound if bound > 0 else 0.0
    return RatioReport(count, excess, bound, ratio, k)


def line_incidences(A, B, lines):
    """
    I(A x B, L) counted line by line in O(|L| |A|).

    Parameters
    ----------
    A, B : FpSet
    lines : array_like
        rows (a, b, d) for a x + b y = d, normalized and distinct.

    Returns
    -------
    int

    """
    p = A.p
    inverse = make_field(p).inverse_table()
    total = 0
    for a, b, d in np.asarray(lines, dtype=np.int64).reshape(-1, 3):
        if b == 0:
            x = d * inverse[a] % p
            total += B.size if x in A else 0
        else:
            ys = (d - a * A.elements) * inverse[b] % p
            total += int(np.count_nonzero(B.bitmap[ys]))
    return total


def line_point_ratio(A, B, lines):
    """
    Excess point/line incidences on A x B against the asymptotic bound.

    bound = |A|^(3/4)|B|^(1/2)|L|^(3/4) + |L| + |A||B|.

    Parameters
    ----------
    A, B : FpSet
        |A| <= |B|.
    lines : array_like
        rows (a, b, d); normalized and deduplicated here.

    Returns
    -------
    RatioReport

    """
    if A.size > B.size:
        raise SizeOrder(f"|A| = {A.size} > |B| = {B.size}")
    p = A.p
    rows = normalize_surfaces(p, lines, 2)
    rows = np.unique(rows, axis=0) if rows.shape[0] else rows
    n_l = rows.shape[0]
    count = line_incidences(A, B, rows)
    excess = count - A.size * B.size * n_l / p
    bound = A.size**0.75 * B.size**0.5 * n_l**0.75 + n_l + A.size * B.size
    ratio = excess / bound if bound > 0 else 0.0
    return RatioReport(count, excess, bound, ratio)
