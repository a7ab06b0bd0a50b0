"""
Set file format.

Header line "p=<p>", then one decimal member per line. Blank lines and
lines starting with '#' are ignored.
"""
import logging

# Our imports
from pyspecenergy.errors import FormatError, OutOfRange
from pyspecenergy.Sets.fpset import FpSet


def read_set(filename):
    """
    Read a set file.

    Parameters
    ----------
    filename : str
        set file name.

    Returns
    -------
    FpSet

    """
    p = None
    members = []
    seen = set()
    with open(filename) as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if p is None:
                if not line.startswith("p="):
                    raise FormatError("expected header 'p=<p>'", filename, lineno)
                try:
                    p = int(line[2:])
                except ValueError:
                    raise FormatError(f"bad modulus {line[2:]!r}", filename, lineno)
                continue
            try:
                x = int(line)
            except ValueError:
                raise FormatError(f"bad member {line!r}", filename, lineno)
            if x in seen:
                raise FormatError(f"duplicate member {x}", filename, lineno)
            seen.add(x)
            members.append(x)
    if p is None:
        raise FormatError("missing header 'p=<p>'", filename, 1)
    try:
        return FpSet(p, members)
    except OutOfRange as e:
        raise FormatError(str(e), filename, None)


def write_set(A, filename):
    """
    Write a set file, members sorted.

    Parameters
    ----------
    A : FpSet
    filename : str

    Returns
    -------
    None.

    """
    with open(filename, "w") as f:
        f.write(f"p={A.p}\n")
        for x in A:
            f.write(f"{x}\n")
    logging.getLogger(__name__).info(f"wrote {A.size} members to {filename}")


def parse_inline(p, text):
    """
    Parse an inline comma list such as "1,2,4" (members reduced mod p).

    Returns
    -------
    FpSet

    """
    text = text.strip()
    if not text:
        return FpSet(p, [])
    try:
        members = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise FormatError(f"bad inline set {text!r}")
    return FpSet(p, members, reduce=True)
