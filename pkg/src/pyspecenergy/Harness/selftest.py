"""
Exact-identity self test.

Every check is a hard pass/fail on a small fixed instance: oracle
agreement of the fast paths and closed-form values.
"""
import logging
from dataclasses import dataclass

import numpy as np

# Our imports
from pyspecenergy.Energy.c4 import c4_aggregates
from pyspecenergy.Energy.energies import (
    additive_energy,
    balanced_additive_energy,
    mult_energy_k,
    mult_energy_k_brute,
    sigma_mult,
)
from pyspecenergy.FieldArithmetic.primefield import make_field
from pyspecenergy.Incidence.incidences import (
    check_vinh,
    collinear_max,
    collinear_max_brute,
)
from pyspecenergy.Incidence.scene import random_mean_zero_weights, random_scene
from pyspecenergy.Sets.constructors import (
    interval,
    mult_subgroup,
    random_set,
    rep_sq_sum_aa,
    rep_sq_sum_aa_brute,
)
from pyspecenergy.Sets.fpset import FpSet
from pyspecenergy.Spectral.fourier import dft_direct, dft_fast

SELFTEST_TOLERANCE = 1e-9
ORACLE_TOLERANCE = 1e-6


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check."""

    name: str
    ok: bool
    detail: str = ""


def _primitive_roots():
    got = (make_field(7).g, make_field(13).g)
    return got == (3, 2), f"g(7), g(13) = {got}"


def _additive_energy_methods():
    field = make_field(101)
    A = FpSet(101, [1, 2, 3])
    values = {m: additive_energy(field, A, method=m).value for m in ("brute", "convolution", "fourier")}
    return set(values.values()) == {19}, str(values)


def _parseval():
    worst = 0.0
    for p in (101, 211, 421, 1009):
        field = make_field(p)
        for seed in range(3):
            A = random_set(field, p // 3, seed=seed)
            worst = max(worst, dft_direct(field, A).parseval_defect())
    return worst <= SELFTEST_TOLERANCE, f"max relative defect {worst:.3g}"


def _fast_transform():
    field = make_field(1009)
    A = random_set(field, 200, seed=1)
    err = float(np.max(np.abs(dft_fast(field, A).values - dft_direct(field, A).values)))
    return err < ORACLE_TOLERANCE, f"max entry error {err:.3g}"


def _mult_energy_oracle():
    field = make_field(211)
    mismatches = []
    for seed in range(4):
        R = random_set(field, 30, seed=seed, avoid_zero=True)
        for k in (2, 4):
            if mult_energy_k(field, R, k).value != mult_energy_k_brute(field, R, k).value:
                mismatches.append((seed, k))
    return not mismatches, f"mismatches {mismatches}"


def _subgroup_exactness():
    field = make_field(101)
    H = mult_subgroup(field, 25)
    got = (
        mult_energy_k(field, H, 2).value,
        mult_energy_k(field, H, 4).value,
        sigma_mult(field, H).value,
    )
    return got == (25**3, 25**5, 25**2), f"(E2, E4, sigma) = {got}"


def _c4_aggregates():
    field = make_field(101)
    A = interval(field, 8)
    total, total_sq = c4_aggregates(field, A)
    e4 = mult_energy_k(field, A, 4).value
    return (total, total_sq) == (A.size**4, e4), f"({total}, {total_sq}) vs ({A.size**4}, {e4})"


def _zero_sum_oracle():
    field = make_field(1009)
    A = interval(field, 6)
    fast, brute = rep_sq_sum_aa(field, A), rep_sq_sum_aa_brute(field, A)
    return fast == brute, f"{fast} vs {brute}"


def _vinh():
    failures = 0
    rng = np.random.default_rng(0)
    for q in (5, 7, 11):
        for seed in range(10):
            scene = random_scene(q, 3, 2 * q, 2 * q, seed=seed)
            alpha = random_mean_zero_weights(scene.num_points, rng)
            beta = rng.standard_normal(scene.num_surfaces)
            failures += not check_vinh(scene.with_weights(alpha, beta)).passed
    return failures == 0, f"{failures} failures"


def _collinearity_oracle():
    scene = random_scene(7, 2, 40, 1, seed=3)
    fast, brute = collinear_max(scene.points, 7), collinear_max_brute(scene.points, 7)
    return fast == brute, f"{fast} vs {brute}"


def _balanced_energy_display():
    field = make_field(101)
    bad = []
    for d in (4, 5, 10, 20, 25, 50):
        H = mult_subgroup(field, d)
        table = dft_direct(field, H)
        m = table.max_nonzero_magnitude()
        if not balanced_additive_energy(field, H, table) < m * m * H.size:
            bad.append(d)
    return not bad, f"failing orders {bad}"


CHECKS = (
    ("primitive_roots", _primitive_roots),
    ("additive_energy_methods", _additive_energy_methods),
    ("parseval", _parseval),
    ("fast_transform", _fast_transform),
    ("mult_energy_oracle", _mult_energy_oracle),
    ("subgroup_exactness", _subgroup_exactness),
    ("c4_aggregates", _c4_aggregates),
    ("zero_sum_oracle", _zero_sum_oracle),
    ("vinh", _vinh),
    ("collinearity_oracle", _collinearity_oracle),
    ("balanced_energy_display", _balanced_energy_display),
)


def run_selftest():
    """
    Run every check.

    Returns
    -------
    list of CheckResult
        in CHECKS order; a check that raises is recorded as failed.

    """
    logger = logging.getLogger(__name__)
    results = []
    for name, check in CHECKS:
        try:
            ok, detail = check()
        except Exception as e:  # noqa: B902
            ok, detail = False, f"{type(e).__name__}: {e}"
        if not ok:
            logger.warning(f"selftest {name} failed: {detail}")
        results.append(CheckResult(name, bool(ok), detail))
    return results
