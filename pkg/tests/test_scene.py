import itertools

import numpy as np
import pytest

from pyspecenergy.errors import (
    DegenerateSurface,
    DuplicateElement,
    NotPrime,
    OutOfRange,
    PreconditionError,
)
from pyspecenergy.Incidence.incidences import incidence_count, incidences
from pyspecenergy.Incidence.scene import (
    IncidenceScene,
    normalize_surfaces,
    product_scene,
    random_mean_zero_weights,
    random_scene,
)


def test_normalize_surfaces():
    rows = normalize_surfaces(7, [[2, 4, 6, 1], [0, 3, 1, 5]], 3)
    # 2^-1 = 4 and 3^-1 = 5 mod 7
    assert rows.tolist() == [[1, 2, 3, 4], [0, 1, 5, 4]]
    with pytest.raises(DegenerateSurface):
        normalize_surfaces(7, [[0, 0, 0, 1]], 3)


def test_scene_validation():
    with pytest.raises(OutOfRange):
        IncidenceScene(7, 4, [], [])
    with pytest.raises(NotPrime):
        IncidenceScene(9, 3, [], [])
    with pytest.raises(DuplicateElement):
        IncidenceScene(7, 3, [[1, 2, 3], [8, 2, 3]], [])
    with pytest.raises(DuplicateElement):
        IncidenceScene(7, 3, [], [[1, 2, 3, 4], [2, 4, 6, 8]])
    with pytest.raises(OutOfRange):
        IncidenceScene(7, 3, [[1, 2, 3]], [], alpha=[1.0, 2.0])
    with pytest.raises(OutOfRange):
        IncidenceScene(7, 3, [[1, 2, 3]], [], alpha=[np.nan])


def test_scene_arrays_read_only():
    scene = IncidenceScene(5, 2, [[1, 2]], [[1, 1, 3]])
    assert scene.unit_weights()
    with pytest.raises(ValueError):
        scene.points[0, 0] = 3
    assert not scene.with_weights(alpha=[2.0]).unit_weights()


def test_random_scene_is_seeded():
    a = random_scene(11, 3, 30, 20, seed=5)
    b = random_scene(11, 3, 30, 20, seed=5)
    assert np.array_equal(a.points, b.points)
    assert np.array_equal(a.surfaces, b.surfaces)
    assert (a.num_points, a.num_surfaces) == (30, 20)
    with pytest.raises(OutOfRange):
        random_scene(3, 2, 10, 1)


@pytest.mark.parametrize("seed", range(4))
@pytest.mark.parametrize("dim", [2, 3])
def test_dual_preserves_incidences(seed, dim):
    scene = random_scene(11, dim, 15, 15, seed=seed)
    rng = np.random.default_rng(seed)
    scene = scene.with_weights(rng.standard_normal(15), rng.standard_normal(15))
    dual = scene.dual()
    assert dual.num_points == scene.num_surfaces
    assert dual.num_surfaces == scene.num_points
    assert incidence_count(dual) == incidence_count(scene)
    assert incidences(dual) == pytest.approx(incidences(scene), rel=1e-12, abs=1e-12)


def test_dual_without_translation():
    # every point of F_3^2 occupied: no translation avoids them all
    points = list(itertools.product(range(3), repeat=2))
    with pytest.raises(PreconditionError):
        IncidenceScene(3, 2, points, [[1, 0, 1]]).dual()


def test_product_scene_counts_solutions():
    q, S = 101, [1, 2, 5]
    scene = product_scene(q, S)
    assert scene.num_points == scene.num_surfaces == 27
    expected = sum(
        (a * a2 + b * b2 - c * c2) % q == 1
        for a, b, c, a2, b2, c2 in itertools.product(S, repeat=6)
    )
    assert incidence_count(scene) == expected


def test_random_mean_zero_weights():
    w = random_mean_zero_weights(50, np.random.default_rng(1))
    assert w.shape == (50,)
    assert abs(w.sum()) < 1e-9
