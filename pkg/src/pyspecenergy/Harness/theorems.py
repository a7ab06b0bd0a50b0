"""
Verification routines.

Each routine computes both sides of one inequality or identity on a
concrete instance and returns a TheoremReport. Unknown implicit
constants are never asserted here: reports carry ratios, and hard
inequalities with explicit constants set ``passed``.
"""
import logging
from fractions import Fraction
from math import sqrt

import numpy as np

# Our imports
from pyspecenergy.Energy.energies import (
    balanced_additive_energy,
    difference_dilation_energy,
    mult_energy_k,
    sigma_mult,
)
from pyspecenergy.errors import OutOfRange
from pyspecenergy.Incidence.incidences import (
    check_vinh,
    line_point_ratio,
    misha_ratio,
)
from pyspecenergy.Incidence.scene import product_scene, random_mean_zero_weights
from pyspecenergy.Harness.report import make_report
from pyspecenergy.Sets.constructors import (
    coset_representatives,
    mult_subgroup,
    product_set,
    rep_sq_sum_aa,
    stabilizer,
    sumset,
)
from pyspecenergy.Sets.fpset import FpSet
from pyspecenergy.Spectral.fourier import (
    fourier_table,
    spectrum,
    spectrum_size_bound,
)

R_RULES = ("full_spectrum", "coset_search", "explicit")
# relative slack of the exact inequalities, covering the spectrum threshold band
INEQUALITY_BAND = 1e-6
DEFAULT_INCIDENCE_SIZE = 5
SIGMA_NOTE = "sigma^x(R) taken as sum_{lam in R} r_{R/R}(lam)"


def _spectrum_set(field, A, eps, table=None):
    table = fourier_table(field, A) if table is None else table
    spec = spectrum(table, eps)
    return table, spec, FpSet(field.p, spec.nonzero())


def coset_in_spectrum(field, H, spec_set):
    """
    First coset lam H contained in spec_set, smallest representative first.

    Parameters
    ----------
    field : PrimeField
    H : FpSet
        multiplicative subgroup.
    spec_set : FpSet
        Spec_eps(A) minus {0}.

    Returns
    -------
    tuple
        (lam, lam H) or (None, empty set).

    """
    for lam in coset_representatives(field, H):
        if np.all(spec_set.bitmap[H.elements * lam % field.p]):
            return lam, H.dilate(lam)
    return None, FpSet(field.p, [])


def select_r(field, A, spec_set, r_rule="full_spectrum", R=None):
    """
    Build R inside Spec_eps(A) minus {0}.

    Parameters
    ----------
    r_rule : str
        'full_spectrum' (all of it), 'coset_search' (first coset of the
        multiplicative stabilizer of A contained in it) or 'explicit'.
    R : FpSet, optional
        the explicit set.

    Returns
    -------
    tuple
        (R, notes list, extras dict, contained flag).

    """
    notes = []
    extras = {"r_rule": r_rule}
    if r_rule == "full_spectrum":
        notes.append("R = Spec \\ {0}; adversarial R not searched")
        return spec_set, notes, extras, True
    if r_rule == "coset_search":
        H = stabilizer(field, A)
        lam, found = coset_in_spectrum(field, H, spec_set)
        extras.update({"stabilizer_order": H.size, "coset_rep": lam})
        if lam is None:
            notes.append("NoCosetFound")
            logging.getLogger(__name__).info(
                f"no coset of the order-{H.size} stabilizer inside the spectrum (p={field.p})"
            )
        return found, notes, extras, True
    if r_rule == "explicit":
        if R is None:
            raise OutOfRange("r_rule 'explicit' needs R")
        contained = R.issubset(spec_set)
        if not contained:
            notes.append("R not contained in Spec \\ {0}")
        return R, notes, extras, contained
    raise OutOfRange(f"unknown r_rule {r_rule!r}, expected one of {R_RULES}")


def _main_hypothesis(field, A, eps):
    return field.p <= eps * eps * A.size**3


def verify_main(field, A, eps, r_rule="full_spectrum", R=None, family="explicit", seed=0):
    """
    E^x(R) against eps^-4 delta^-1 |R|^(3/2) for R in Spec_eps(A) minus {0}.

    Also checks the exact Fourier-side inequality
    (eps|A|)^4 / p * E^x(R) <= sum_x r_{(f_A - f_A)R}(x)^2.

    Parameters
    ----------
    field : PrimeField
    A : FpSet
        nonempty.
    eps : float
        in (0, 1].
    r_rule : str, optional
    R : FpSet, optional
        used with r_rule 'explicit'.

    Returns
    -------
    TheoremReport
        precondition_ok is p <= eps^2 |A|^3.

    """
    table, spec, spec_set = _spectrum_set(field, A, eps)
    R, notes, extras, contained = select_r(field, A, spec_set, r_rule, R)
    energy = mult_energy_k(field, R, 2).value
    delta = A.size / field.p
    rhs = eps**-4 / delta * R.size**1.5

    side_lhs = (eps * A.size) ** 4 / field.p * energy
    side_rhs = difference_dilation_energy(field, A, R) if R.size else 0.0
    passed = side_lhs <= side_rhs * (1.0 + INEQUALITY_BAND) + INEQUALITY_BAND
    extras.update(
        {
            "spectrum_size": len(spec),
            "spectrum_bound": spectrum_size_bound(table, eps),
            "fourier_side_lhs": side_lhs,
            "fourier_side_rhs": side_rhs,
        }
    )
    return make_report(
        "main",
        A,
        energy,
        rhs,
        family=family,
        eps=eps,
        r_size=R.size,
        seed=seed,
        precondition_ok=_main_hypothesis(field, A, eps) and contained,
        passed=passed,
        notes=notes,
        extras=extras,
    )


def verify_e4(field, A, eps, family="explicit", seed=0):
    """
    E_4^x(R), R = Spec_eps(A) minus {0}, against eps^-16 delta^-4 (E+(f_A)/|A|^3)^2.

    Returns
    -------
    TheoremReport
        the bound has no hypothesis; polylog factors show in ratio_log.

    """
    table, spec, R = _spectrum_set(field, A, eps)
    energy = mult_energy_k(field, R, 4).value
    balanced = balanced_additive_energy(field, A, table)
    delta = A.size / field.p
    rhs = eps**-16 * delta**-4 * (balanced / A.size**3) ** 2
    return make_report(
        "e4",
        A,
        energy,
        rhs,
        family=family,
        eps=eps,
        r_size=R.size,
        seed=seed,
        extras={"balanced_energy": balanced, "spectrum_size": len(spec)},
    )


def verify_sigma(field, A, eps, r_rule="full_spectrum", R=None, family="explicit", seed=0):
    """
    sigma^x(R) against
    eps^-4 delta^-1 |R|^(3/4) (E+(f_A)/|A|^3)^(1/2) + eps^-4 delta^-1 (1 + |R|/|A|).

    Returns
    -------
    TheoremReport
        shares the hypothesis p <= eps^2 |A|^3.

    """
    table, spec, spec_set = _spectrum_set(field, A, eps)
    R, notes, extras, contained = select_r(field, A, spec_set, r_rule, R)
    notes.append(SIGMA_NOTE)
    value = sigma_mult(field, R).value
    balanced = balanced_additive_energy(field, A, table)
    delta = A.size / field.p
    scale = eps**-4 / delta
    rhs = scale * R.size**0.75 * sqrt(balanced / A.size**3) + scale * (1 + R.size / A.size)
    extras["balanced_energy"] = balanced
    return make_report(
        "sigma",
        A,
        value,
        rhs,
        family=family,
        eps=eps,
        r_size=R.size,
        seed=seed,
        precondition_ok=_main_hypothesis(field, A, eps) and contained,
        notes=notes,
        extras=extras,
    )


def verify_zero_sum(field, A, family="explicit", seed=0):
    """
    sum_x r_{AA+AA}(x)^2 - |A|^8/p against |A|^4 E_4^x(A)^(1/2) + E_4^x(A) |A|^2.

    Returns
    -------
    TheoremReport
        lhs is real (the exact integer sum is kept in extras).

    """
    A.require_nonzero()
    total = rep_sq_sum_aa(field, A)
    e4 = mult_energy_k(field, A, 4).value
    n = A.size
    lhs = float(Fraction(total) - Fraction(n**8, field.p))
    rhs = n**4 * sqrt(e4) + e4 * n**2
    return make_report(
        "zero_sum",
        A,
        lhs,
        rhs,
        family=family,
        seed=seed,
        r_size=n,
        extras={"rep_sq_sum": total, "e4": e4},
    )


def verify_aa_plus_aa(field, A, family="explicit", seed=0):
    """
    |AA+AA| against min{p, |A|^2} under |A+A|^3 |A| <= p^3.

    Also hard-checks |A|^8 <= |AA+AA| * sum_x r_{AA+AA}(x)^2.

    Returns
    -------
    TheoremReport

    """
    A.require_nonzero()
    doubled = sumset(field, A, A)
    products = product_set(field, A, A)
    grown = sumset(field, products, products)
    n = A.size
    condition = doubled.size**3 * n <= field.p**3
    total = rep_sq_sum_aa(field, A)
    passed = n**8 <= grown.size * total
    return make_report(
        "aa_plus_aa",
        A,
        grown.size,
        min(field.p, n * n),
        family=family,
        seed=seed,
        r_size=n,
        precondition_ok=condition,
        passed=passed,
        extras={
            "K": doubled.size / n,
            "sumset_size": doubled.size,
            "product_set_size": products.size,
            "rep_sq_sum": total,
        },
    )


def verify_doubling_e4(field, A, family="explicit", seed=0):
    """
    E_4^x(A) - |A+A|^8/p^3 against |A+A|^5/|A| under |A+A|^3 |A| <= p^3.

    Returns
    -------
    TheoremReport

    """
    A.require_nonzero()
    s = sumset(field, A, A).size
    e4 = mult_energy_k(field, A, 4).value
    lhs = float(Fraction(e4) - Fraction(s**8, field.p**3))
    return make_report(
        "doubling_e4",
        A,
        lhs,
        s**5 / A.size,
        family=family,
        seed=seed,
        r_size=A.size,
        precondition_ok=s**3 * A.size <= field.p**3,
        extras={"sumset_size": s, "e4": e4},
    )


def verify_example(field, A, eps=0.5, family="explicit", seed=0):
    """
    Large-spectrum regime: E^x(R) against |R|^(5/2), R = Spec_eps(A) minus {0}.

    The regime |R| >= delta^-1 eps^-2 / 4 is the precondition. The sigma^x
    analogue |R|^(7/4) + |R|^2/|A| goes to extras; passed is the exact
    E+(f_A) < |A|^3.

    Returns
    -------
    TheoremReport

    """
    table, spec, R = _spectrum_set(field, A, eps)
    energy = mult_energy_k(field, R, 2).value
    sigma = sigma_mult(field, R).value
    balanced = balanced_additive_energy(field, A, table)
    delta = A.size / field.p
    sigma_rhs = R.size**1.75 + R.size**2 / A.size
    return make_report(
        "example",
        A,
        energy,
        R.size**2.5,
        family=family,
        eps=eps,
        r_size=R.size,
        seed=seed,
        precondition_ok=R.size >= 1 / (4 * delta * eps * eps),
        passed=balanced < A.size**3,
        notes=[SIGMA_NOTE],
        extras={
            "sigma": sigma,
            "sigma_rhs": sigma_rhs,
            "sigma_ratio": sigma / sigma_rhs if sigma_rhs else 0.0,
            "balanced_energy": balanced,
        },
    )


def tightness_subgroup(field, d, eps, seed=0, family="subgroup"):
    """
    Subgroup construction showing the E_4^x and E^x bounds are tight.

    A is the subgroup of order d. The first coset lam A inside
    Spec_eps(A) minus {0} must have E_4^x = d^5 and E^x = d^3 exactly;
    with m = max_{r != 0} |A^(r)| the display E+(f_A) < m^2 |A| is
    checked and m / sqrt(p) recorded.
    family only labels the row.

    Returns
    -------
    TheoremReport
        lhs E_4^x(lam A), rhs |lam A|^5; NoCosetFound in notes when no
        coset qualifies at this eps.

    """
    A = mult_subgroup(field, d)
    table, spec, spec_set = _spectrum_set(field, A, eps)
    lam, R = coset_in_spectrum(field, A, spec_set)
    m = table.max_nonzero_magnitude()
    balanced = balanced_additive_energy(field, A, table)
    display_ok = balanced < m * m * A.size
    notes = []
    extras = {
        "d": d,
        "coset_rep": lam,
        "max_fourier": m,
        "max_over_sqrt_p": m / sqrt(field.p),
        "balanced_energy": balanced,
        "display_ok": display_ok,
    }
    if lam is None:
        notes.append("NoCosetFound")
        e4 = 0
        exact_ok = True
    else:
        e4 = mult_energy_k(field, R, 4).value
        e2 = mult_energy_k(field, R, 2).value
        exact_ok = e4 == d**5 and e2 == d**3
        extras["e2"] = e2
        if not exact_ok:
            logging.getLogger(__name__).error(
                f"coset {lam}H: E4 = {e4} (expected {d**5}), E2 = {e2} (expected {d**3})"
            )
    return make_report(
        "tightness",
        A,
        e4,
        R.size**5,
        family=family,
        eps=eps,
        r_size=R.size,
        seed=seed,
        passed=exact_ok and display_ok,
        notes=notes,
        extras=extras,
    )


def _incidence_core(A, incidence_size):
    core = A.without_zero()
    return [int(x) for x in core.elements[:incidence_size]]


def verify_vinh(field, A, seed=0, incidence_size=DEFAULT_INCIDENCE_SIZE, family="explicit"):
    """
    Mean-zero incidence bound on the product scene of the first elements of A.

    Points (a, b, c) and planes a' x + b' y - c' z = 1 over the core
    S (first incidence_size nonzero members); point weights are seeded
    mean-zero normals, plane weights seeded normals.

    Returns
    -------
    TheoremReport
        passed iff |sum I alpha beta| <= q ||alpha|| ||beta||.

    """
    S = _incidence_core(A, incidence_size)
    scene = product_scene(field.p, S)
    rng = np.random.default_rng(seed)
    alpha = random_mean_zero_weights(scene.num_points, rng)
    beta = rng.standard_normal(scene.num_surfaces)
    report = check_vinh(scene.with_weights(alpha, beta))
    return make_report(
        "vinh",
        A,
        report.lhs,
        report.rhs,
        family=family,
        seed=seed,
        r_size=len(S),
        passed=report.passed,
        extras={"points": scene.num_points, "planes": scene.num_surfaces},
    )


def verify_misha(field, A, seed=0, incidence_size=DEFAULT_INCIDENCE_SIZE, family="explicit"):
    """
    Point/plane excess on the product scene against |P|^(1/2)|Pi| + k|P|.

    Returns
    -------
    TheoremReport

    """
    S = _incidence_core(A, incidence_size)
    scene = product_scene(field.p, S)
    report = misha_ratio(scene, dual=True)
    return make_report(
        "misha",
        A,
        report.excess,
        report.bound,
        family=family,
        seed=seed,
        r_size=len(S),
        extras={"incidences": report.incidences, "collinear": report.collinear},
    )


def verify_line_point(field, A, seed=0, incidence_size=DEFAULT_INCIDENCE_SIZE, family="explicit"):
    """
    Point/line excess on S x A for the lines y = lam x + s, lam, s in S.

    S is the core of A, so |S| <= |A| as required.

    Returns
    -------
    TheoremReport

    """
    S = _incidence_core(A, incidence_size)
    core = FpSet(field.p, S)
    lines = [(lam, -1, -s) for lam in S for s in S]
    report = line_point_ratio(core, A, lines)
    return make_report(
        "line_point",
        A,
        report.excess,
        report.bound,
        family=family,
        seed=seed,
        r_size=len(S),
        extras={"incidences": report.incidences, "lines": len(lines)},
    )


THEOREM_IDS = (
    "main",
    "e4",
    "sigma",
    "zero_sum",
    "aa_plus_aa",
    "doubling_e4",
    "example",
    "tightness",
    "vinh",
    "misha",
    "line_point",
)


def run_theorem(
    theorem_id,
    field,
    A,
    *,
    eps=0.5,
    seed=0,
    family="explicit",
    r_rule="full_spectrum",
    incidence_size=DEFAULT_INCIDENCE_SIZE,
):
    """
    Dispatch one theorem id on an instance.

    Parameters
    ----------
    theorem_id : str
        one of THEOREM_IDS; 'tightness' needs A to be a subgroup.

    Returns
    -------
    TheoremReport

    """
    common = {"family": family, "seed": seed}
    if theorem_id == "main":
        return verify_main(field, A, eps, r_rule, **common)
    if theorem_id == "e4":
        return verify_e4(field, A, eps, **common)
    if theorem_id == "sigma":
        return verify_sigma(field, A, eps, r_rule, **common)
    if theorem_id == "zero_sum":
        return verify_zero_sum(field, A, **common)
    if theorem_id == "aa_plus_aa":
        return verify_aa_plus_aa(field, A, **common)
    if theorem_id == "doubling_e4":
        return verify_doubling_e4(field, A, **common)
    if theorem_id == "example":
        return verify_example(field, A, eps, **common)
    if theorem_id == "tightness":
        return tightness_subgroup(field, A.size, eps, **common)
    if theorem_id == "vinh":
        return verify_vinh(field, A, incidence_size=incidence_size, **common)
    if theorem_id == "misha":
        return verify_misha(field, A, incidence_size=incidence_size, **common)
    if theorem_id == "line_point":
        return verify_line_point(field, A, incidence_size=incidence_size, **common)
    raise OutOfRange(f"unknown theorem {theorem_id!r}, expected one of {THEOREM_IDS}")
