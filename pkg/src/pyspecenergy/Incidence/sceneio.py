"""
Scene file format.

Header "q=<q> dim=<2|3>", then one record per line:
"P x y [z] w" for a point of weight w and "S a b [c] d w" for a surface
a x + b y [+ c z] = d of weight w. '#' starts a comment line.
"""
# Our imports
from pyspecenergy.errors import FormatError, SpecEnergyError
from pyspecenergy.Incidence.scene import IncidenceScene


def _parse_header(line, filename, lineno):
    fields = dict(tok.split("=", 1) for tok in line.split() if "=" in tok)
    try:
        return int(fields["q"]), int(fields["dim"])
    except (KeyError, ValueError):
        raise FormatError("expected header 'q=<q> dim=<2|3>'", filename, lineno)


def read_scene(filename):
    """
    Read a scene file.

    Parameters
    ----------
    filename : str

    Returns
    -------
    IncidenceScene

    """
    header = None
    points, alpha, surfaces, beta = [], [], [], []
    with open(filename) as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if header is None:
                header = _parse_header(line, filename, lineno)
                continue
            q, dim = header
            tokens = line.split()
            kind, values = tokens[0], tokens[1:]
            width = dim if kind == "P" else dim + 1
            if kind not in ("P", "S") or len(values) != width + 1:
                raise FormatError(f"bad record {line!r}", filename, lineno)
            try:
                coords = [int(v) for v in values[:-1]]
                weight = float(values[-1])
            except ValueError:
                raise FormatError(f"bad number in {line!r}", filename, lineno)
            if kind == "P":
                points.append(coords)
                alpha.append(weight)
            else:
                surfaces.append(coords)
                beta.append(weight)
    if header is None:
        raise FormatError("missing header", filename, 1)
    q, dim = header
    try:
        return IncidenceScene(q, dim, points, surfaces, alpha, beta)
    except SpecEnergyError as e:
        raise FormatError(str(e), filename, None)


def write_scene(scene, filename):
    """
    Write a scene file; weights with 12 significant digits.

    Parameters
    ----------
    scene : IncidenceScene
    filename : str

    Returns
    -------
    None.

    """
    with open(filename, "w") as f:
        f.write(f"q={scene.q} dim={scene.dim}\n")
        for pt, w in zip(scene.points, scene.alpha):
            f.write("P " + " ".join(str(int(c)) for c in pt) + f" {w:.12g}\n")
        for row, w in zip(scene.surfaces, scene.beta):
            f.write("S " + " ".join(str(int(c)) for c in row) + f" {w:.12g}\n")
