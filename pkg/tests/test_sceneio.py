import numpy as np
import pytest

from pyspecenergy.errors import FormatError
from pyspecenergy.Incidence.incidences import incidences
from pyspecenergy.Incidence.scene import IncidenceScene
from pyspecenergy.Incidence.sceneio import read_scene, write_scene


def test_read_scene(tmp_path):
    path = tmp_path / "s.scene"
    path.write_text(
        "# two points, one plane\n"
        "q=5 dim=3\n"
        "P 0 0 0 1.5\n"
        "P 1 2 3 -1.5\n"
        "S 0 0 2 0 2\n"
    )
    scene = read_scene(str(path))
    assert (scene.q, scene.dim) == (5, 3)
    assert scene.points.tolist() == [[0, 0, 0], [1, 2, 3]]
    # normalized on load: 2z = 0 becomes z = 0
    assert scene.surfaces.tolist() == [[0, 0, 1, 0]]
    assert incidences(scene) == pytest.approx(3.0)


def test_write_then_read(tmp_path):
    path = tmp_path / "w.scene"
    scene = IncidenceScene(7, 2, [[1, 2], [3, 4]], [[1, 1, 3]], [0.25, -0.25], [2.0])
    write_scene(scene, str(path))
    assert path.read_text().splitlines() == ["q=7 dim=2", "P 1 2 0.25", "P 3 4 -0.25", "S 1 1 3 2"]
    again = read_scene(str(path))
    assert np.array_equal(again.points, scene.points)
    assert np.array_equal(again.alpha, scene.alpha)


@pytest.mark.parametrize(
    "text, line",
    [
        ("P 1 2 3 1\n", 1),
        ("q=5 dim=3\nP 1 2 1\n", 2),
        ("q=5 dim=3\nX 1 2 3 1\n", 2),
        ("q=5 dim=2\nP 1 2 1\nS 1 a 0 1\n", 3),
    ],
)
def test_format_errors(tmp_path, text, line):
    path = tmp_path / "bad.scene"
    path.write_text(text)
    with pytest.raises(FormatError) as excinfo:
        read_scene(str(path))
    assert excinfo.value.line == line


def test_invalid_geometry_is_a_format_error(tmp_path):
    path = tmp_path / "dup.scene"
    path.write_text("q=5 dim=2\nP 1 1 1\nP 6 1 1\n")
    with pytest.raises(FormatError):
        read_scene(str(path))
    empty = tmp_path / "empty.scene"
    empty.write_text("# nothing\n")
    with pytest.raises(FormatError):
        read_scene(str(empty))
