"""
Point/plane (dim 3) and point/line (dim 2) scenes over F_q.

A surface row (a, b, [c,] d) means a x + b y [+ c z] = d. Rows are
normalized by scaling the first nonzero normal coefficient to 1.
"""
import logging

import numpy as np

# Our imports
from pyspecenergy.errors import (
    DegenerateSurface,
    DuplicateElement,
    OutOfRange,
    PreconditionError,
)
from pyspecenergy.FieldArithmetic.primefield import make_field

# candidate translations examined when building the dual scene
DUAL_SEARCH_LIMIT = 2 * 10**6


def normalize_surfaces(q, surfaces, dim):
    """
    Scale each surface so its first nonzero normal coefficient is 1.

    Parameters
    ----------
    q : int
        field modulus.
    surfaces : array_like
        rows (normal..., d), shape (m, dim + 1).
    dim : int
        2 or 3.

    Returns
    -------
    numpy.ndarray
        normalized int64 rows.

    """
    rows = np.asarray(surfaces, dtype=np.int64).reshape(-1, dim + 1) % q
    if rows.shape[0] == 0:
        return rows
    normals = rows[:, :dim]
    nonzero = normals != 0
    if not np.all(nonzero.any(axis=1)):
        bad = int(np.flatnonzero(~nonzero.any(axis=1))[0])
        raise DegenerateSurface(f"surface {bad} has an all-zero normal vector")
    lead = normals[np.arange(rows.shape[0]), np.argmax(nonzero, axis=1)]
    inverse = make_field(q).inverse_table()[lead]
    return rows * inverse[:, None] % q


def _encode(rows, q):
    # injective integer key of each row
    weights = q ** np.arange(rows.shape[1], dtype=np.int64)
    return rows @ weights


def _check_distinct(rows, q, what):
    keys = _encode(rows, q)
    if np.unique(keys).size != keys.size:
        raise DuplicateElement(f"duplicate {what} in scene")


def _weights(values, n, what):
    if values is None:
        return np.ones(n, dtype=np.float64)
    w = np.asarray(values, dtype=np.float64).ravel()
    if w.size != n:
        raise OutOfRange(f"{what}: {w.size} weights for {n} items")
    if not np.all(np.isfinite(w)):
        raise OutOfRange(f"{what} must be finite reals")
    return w


class IncidenceScene:
    """Define weighted points and surfaces in F_q^dim."""

    def __init__(self, q, dim, points, surfaces, alpha=None, beta=None):
        """
        Validate and normalize a scene.

        Parameters
        ----------
        q : int
            odd prime modulus.
        dim : int
            2 (points/lines) or 3 (points/planes).
        points : array_like
            shape (n, dim) coordinates, reduced mod q.
        surfaces : array_like
            shape (m, dim + 1) rows (normal..., d).
        alpha, beta : array_like, optional
            real weights of points and surfaces; unit by default.

        Returns
        -------
        None.

        """
        if dim not in (2, 3):
            raise OutOfRange(f"dim must be 2 or 3, got {dim}")
        make_field(q)  # validates q
        self.q = int(q)
        self.dim = int(dim)
        self.points = np.asarray(points, dtype=np.int64).reshape(-1, dim) % q
        self.surfaces = normalize_surfaces(q, surfaces, dim)
        self.normalized = True
        _check_distinct(self.points, q, "points")
        _check_distinct(self.surfaces, q, "surfaces")
        self.alpha = _weights(alpha, len(self.points), "alpha")
        self.beta = _weights(beta, len(self.surfaces), "beta")
        for arr in (self.points, self.surfaces, self.alpha, self.beta):
            arr.flags.writeable = False

    def __repr__(self):
        """Print the object purpose."""
        s = (
            f"IncidenceScene(q={self.q}, dim={self.dim}, "
            f"{self.num_points} points, {self.num_surfaces} surfaces)\n"
        )
        return s

    @property
    def num_points(self):
        """Number of points."""
        return int(self.points.shape[0])

    @property
    def num_surfaces(self):
        """Number of planes (or lines)."""
        return int(self.surfaces.shape[0])

    def unit_weights(self):
        """True when all weights equal 1."""
        return bool(np.all(self.alpha == 1.0) and np.all(self.beta == 1.0))

    def with_weights(self, alpha=None, beta=None):
        """Same geometry with new weights (unit where None)."""
        return IncidenceScene(self.q, self.dim, self.points, self.surfaces, alpha, beta)

    def _translation(self):
        # first t (lexicographic) with no point at -t and no surface through -t
        q, dim = self.q, self.dim
        cells = q**dim
        if cells > DUAL_SEARCH_LIMIT:
            raise PreconditionError(f"q^dim = {cells} too large for the translation search")
        digits = np.indices((q,) * dim).reshape(dim, -1).T
        bad = np.zeros(cells, dtype=bool)
        bad[_encode(np.flip(-self.points % q, axis=1), q)] = True
        normals = self.surfaces[:, :dim]
        offsets = self.surfaces[:, dim]
        for normal, d in zip(normals, offsets):
            bad |= (digits @ normal + d) % q == 0
        good = np.flatnonzero(~bad)
        if good.size == 0:
            raise PreconditionError("no translation avoids every point and surface")
        return digits[good[0]]

    def dual(self):
        """
        Dual scene swapping the roles of points and surfaces.

        After translating by t so that no point is the origin and no surface
        passes through it, a point X becomes the surface X . u = 1 and a
        surface n . x = d becomes the point n / d. Incidences are preserved.

        Returns
        -------
        IncidenceScene

        """
        q, dim = self.q, self.dim
        t = self._translation()
        points = (self.points + t) % q
        normals = self.surfaces[:, :dim]
        offsets = (self.surfaces[:, dim] + normals @ t) % q
        inv = make_field(q).inverse_table()
        new_points = normals * inv[offsets][:, None] % q
        new_surfaces = np.hstack([points, np.ones((len(points), 1), dtype=np.int64)])
        logging.getLogger(__name__).debug(f"dual scene via translation {t.tolist()}")
        return IncidenceScene(q, dim, new_points, new_surfaces, self.beta, self.alpha)


def random_scene(q, dim, n_points, n_surfaces, seed=0):
    """
    Seeded scene of distinct random points and surfaces, unit weights.

    Parameters
    ----------
    q : int
    dim : int
    n_points, n_surfaces : int
    seed : int, optional

    Returns
    -------
    IncidenceScene

    """
    rng = np.random.default_rng(seed)
    cells = q**dim
    if n_points > cells:
        raise OutOfRange(f"{n_points} points requested in a space of {cells}")
    codes = rng.choice(cells, size=n_points, replace=False)
    points = np.stack([(codes // q**j) % q for j in range(dim)], axis=1)
    total_surfaces = (cells - 1) // (q - 1) * q
    if n_surfaces > total_surfaces:
        raise OutOfRange(f"{n_surfaces} surfaces requested, only {total_surfaces} exist")
    found = {}
    while len(found) < n_surfaces:
        rows = rng.integers(0, q, size=(n_surfaces, dim + 1))
        rows = normalize_surfaces(q, rows[np.any(rows[:, :dim] != 0, axis=1)], dim)
        for row, key in zip(rows, _encode(rows, q)):
            if len(found) < n_surfaces:
                found.setdefault(int(key), row)
    surfaces = np.array(list(found.values()), dtype=np.int64).reshape(-1, dim + 1)
    return IncidenceScene(q, dim, points.reshape(-1, dim), surfaces)


def product_scene(q, S):
    """
    Points (a, b, c) in S^3 and planes a' x + b' y - c' z = 1, (a', b', c') in S^3.

    Incidences count solutions of a a' + b b' - c c' = 1.

    Parameters
    ----------
    q : int
    S : iterable of int
        residues with at least one nonzero.

    Returns
    -------
    IncidenceScene

    """
    values = sorted({int(s) % q for s in S})
    triples = np.array(np.meshgrid(values, values, values, indexing="ij")).reshape(3, -1).T
    planes = np.hstack(
        [triples[:, :2], (-triples[:, 2:3]) % q, np.ones((len(triples), 1), dtype=np.int64)]
    )
    planes = planes[np.any(planes[:, :3] != 0, axis=1)]
    return IncidenceScene(q, 3, triples, planes)


def random_mean_zero_weights(n, rng):
    """Centered standard normal weights; their sum is zero up to rounding."""
    w = rng.standard_normal(n)
    return w - w.mean()
