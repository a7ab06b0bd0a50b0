"""Blessed max-ratio baselines and the non-regression check against them."""
import json
import logging
import math
import os

# Our imports
from pyspecenergy.errors import FormatError
from pyspecenergy.Harness.report import summarize

# allowed growth of a max ratio over its blessed value
REGRESSION_FACTOR = 2.0


def load_baseline(filename):
    """
    Read a baseline file.

    Parameters
    ----------
    filename : str
        JSON object "<theorem_id>/<family>" -> max ratio.

    Returns
    -------
    dict

    """
    with open(filename) as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise FormatError(f"bad baseline JSON: {e.msg}", filename, e.lineno)
    if not isinstance(data, dict) or not all(
        isinstance(v, (int, float)) for v in data.values()
    ):
        raise FormatError("baseline must map keys to numbers", filename)
    return {str(k): float(v) for k, v in data.items()}


def save_baseline(summary, filename):
    """Write a summary as a baseline (keys sorted, 12 significant digits)."""
    data = {k: float(f"{v:.12g}") for k, v in sorted(summary.items())}
    with open(filename, "w") as f:
        json.dump(data, f, indent=2, sort_keys=True)
        f.write("\n")
    logging.getLogger(__name__).info(f"baseline blessed in {filename} ({len(data)} keys)")


def check_baseline(reports, baseline, factor=REGRESSION_FACTOR):
    """
    Compare per-(theorem, family) max ratios with a baseline.

    Parameters
    ----------
    reports : iterable of TheoremReport
    baseline : dict
    factor : float, optional

    Returns
    -------
    list of str
        one message per regression or infinite ratio; empty when clean.
        Keys absent from the baseline are not regressions.

    """
    reports = list(reports)
    problems = [
        f"{r.theorem_id}/{r.family} p={r.p} seed={r.seed}: infinite ratio"
        for r in reports
        if not math.isfinite(r.ratio)
    ]
    for key, value in summarize(reports).items():
        blessed = baseline.get(key)
        if blessed is None:
            continue
        # limit >= blessed for either sign
        limit = blessed + (factor - 1) * abs(blessed)
        if value > limit:
            problems.append(
                f"{key}: max ratio {value:.12g} > {limit:.12g} (blessed {blessed:.12g}, factor {factor:g})"
            )
    return problems


def bless_or_check(reports, filename, bless=False):
    """
    Bless a missing (or forced) baseline, otherwise check against it.

    Returns
    -------
    list of str
        regressions; when blessing only the infinite ratios.

    """
    reports = list(reports)
    if bless or not os.path.exists(filename):
        save_baseline(summarize(reports), filename)
        return check_baseline(reports, {})
    return check_baseline(reports, load_baseline(filename))
