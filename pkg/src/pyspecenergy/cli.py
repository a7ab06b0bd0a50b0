"""
Command line front end.

Verbs: spectrum, energy, subgroup, incidence, verify, sweep, selftest.
Sets are given inline (--set 1,2,4 with --p) or as a set file
(--set-file). Floats print with 12 significant digits; --seed defaults
to 0 everywhere. Exit status: 0 success, 1 computation error, 2 usage.

Output tables: verify and sweep write CSV with the columns
theorem_id, family, p, size, delta, eps, r_size, seed, precondition_ok,
lhs, rhs, ratio, ratio_log, passed, notes and a JSON-lines mirror (one
object per row, keys sorted, extras included).
"""
import argparse
import json
import logging
import sys

# Our imports
from pyspecenergy import __version__
from pyspecenergy.Energy.c4 import c4_aggregates
from pyspecenergy.Energy.energies import (
    additive_energy,
    balanced_additive_energy_fraction,
    mult_energy_k,
    sigma_mult,
)
from pyspecenergy.Energy.repfunction import rep_add, rep_mul
from pyspecenergy.errors import SpecEnergyError
from pyspecenergy.FieldArithmetic.primefield import make_field
from pyspecenergy.Harness.families import FAMILIES, build_family
from pyspecenergy.Harness.report import COLUMNS, format_value
from pyspecenergy.Harness.selftest import run_selftest
from pyspecenergy.Harness.sweep import emit, sweep
from pyspecenergy.Harness.sweepconfig import SweepConfig, load_config
from pyspecenergy.Harness.theorems import R_RULES, THEOREM_IDS, run_theorem
from pyspecenergy.Incidence.incidences import (
    check_vinh,
    incidence_count,
    incidences,
    misha_ratio,
)
from pyspecenergy.Incidence.sceneio import read_scene
from pyspecenergy.Sets.constructors import (
    coset,
    coset_representatives,
    mult_subgroup,
)
from pyspecenergy.Sets.setio import parse_inline, read_set, write_set
from pyspecenergy.Spectral.fourier import fourier_table, spectrum

ENERGY_KINDS = ("add", "mult", "balanced", "sigma", "c4")


class UsageError(Exception):
    """Flag combination argparse cannot express."""


def _add_set_arguments(parser):
    parser.add_argument("--p", type=int, help="odd prime modulus")
    parser.add_argument("--set", dest="inline", help="comma separated residues mod p")
    parser.add_argument("--set-file", help="set file ('p=<p>' header, one residue per line)")


def _load_set(args):
    if args.set_file:
        A = read_set(args.set_file)
        return make_field(A.p), A
    if args.p is None or args.inline is None:
        raise UsageError("give --set-file, or --p together with --set")
    return make_field(args.p), parse_inline(args.p, args.inline)


def _print_rows(header, rows):
    print(",".join(header))
    for row in rows:
        print(",".join(format_value(v) for v in row))


def cmd_spectrum(args):
    field, A = _load_set(args)
    table = fourier_table(field, A, method=args.method)
    spec = spectrum(table, args.eps)
    print(f"# p={field.p} |A|={A.size} eps={format_value(args.eps)} |Spec|={len(spec)}")
    _print_rows(("r", "magnitude"), zip(spec.elements, spec.magnitudes))
    if args.out:
        spec.write_csv(args.out)
    if args.table:
        table.write_csv(args.table)
    return 0


def cmd_energy(args):
    field, A = _load_set(args)
    rep = None
    if args.kind == "add":
        value = additive_energy(field, A, method=args.method).value
        rep = rep_add(field, A, A, "plus")
    elif args.kind == "mult":
        value = mult_energy_k(field, A, args.k).value
        rep = rep_mul(field, A, A, "ratio")
    elif args.kind == "balanced":
        value = float(balanced_additive_energy_fraction(field, A))
    elif args.kind == "sigma":
        value = sigma_mult(field, A).value
    else:
        total, total_sq = c4_aggregates(field, A)
        value = total_sq
        print(f"sum C4 = {total}")
    label = f"E{args.k}x" if args.kind == "mult" else args.kind
    print(f"p={field.p} |A|={A.size} {label} = {format_value(value)}")
    if args.out:
        if rep is not None:
            rep.write_csv(args.out)
        else:
            with open(args.out, "w") as f:
                json.dump({"kind": args.kind, "p": field.p, "size": A.size, "value": value}, f)
                f.write("\n")
    return 0


def cmd_subgroup(args):
    field = make_field(args.p)
    H = mult_subgroup(field, args.d)
    print(f"# p={field.p} g={field.g} d={args.d} index={field.order // args.d}")
    print("H = " + ",".join(str(x) for x in H))
    for lam in coset_representatives(field, H)[1:]:
        print(f"{lam}H = " + ",".join(str(x) for x in coset(field, H, lam)))
    if args.out:
        write_set(H, args.out)
    return 0


def cmd_incidence(args):
    scene = read_scene(args.scene)
    print(f"# q={scene.q} dim={scene.dim} |P|={scene.num_points} |S|={scene.num_surfaces}")
    if args.check == "count":
        print(f"incidences = {incidence_count(scene)}")
        print(f"weighted = {format_value(incidences(scene))}")
    elif args.check == "vinh":
        report = check_vinh(scene)
        print(
            f"lhs = {format_value(report.lhs)} rhs = {format_value(report.rhs)} "
            f"constant = {format_value(report.constant)} passed = {format_value(report.passed)}"
        )
        if not report.passed:
            return 1
    else:
        report = misha_ratio(scene, dual=args.dual)
        print(
            f"incidences = {report.incidences} excess = {format_value(report.excess)} "
            f"bound = {format_value(report.bound)} ratio = {format_value(report.ratio)} k = {report.collinear}"
        )
    return 0


def _verify_set(args):
    if args.set_file or args.inline:
        field, A = _load_set(args)
        return field, A, "explicit"
    if args.p is None or args.family is None:
        raise UsageError("give --set/--set-file, or --p with --family")
    field = make_field(args.p)
    if args.family in ("subgroup", "coset") and args.d is not None:
        A = mult_subgroup(field, args.d)
        if args.family == "coset":
            reps = coset_representatives(field, A)
            A = coset(field, A, reps[1] if len(reps) > 1 else reps[0])
        return field, A, args.family
    A, _ = build_family(field, args.family, seed=args.seed)
    return field, A, args.family


def cmd_verify(args):
    field, A, family = _verify_set(args)
    report = run_theorem(
        args.theorem,
        field,
        A,
        eps=args.eps,
        seed=args.seed,
        family=family,
        r_rule=args.r_rule,
        incidence_size=args.incidence_size,
    )
    _print_rows(COLUMNS, [[getattr(report, c) for c in COLUMNS]])
    if args.out:
        emit([report], args.out)
    return 0


def cmd_sweep(args):
    config = load_config(args.config) if args.config else SweepConfig()
    config = config.with_overrides(output=args.out, baseline=args.baseline)
    reports, summary, problems = sweep(config, jobs=args.jobs, bless=args.bless)
    print(f"# {len(reports)} rows")
    for key, value in summary.items():
        print(f"{key}: max ratio {format_value(value)}")
    failed = [r for r in reports if r.passed is False]
    for r in failed:
        print(f"FAILED {r.theorem_id}/{r.family} p={r.p} eps={format_value(r.eps)} seed={r.seed}")
    for message in problems:
        print(f"REGRESSION {message}")
    return 1 if failed or problems else 0


def cmd_selftest(args):
    results = run_selftest()
    for result in results:
        status = "ok" if result.ok else "FAIL"
        print(f"{status:4s} {result.name}: {result.detail}")
    return 0 if all(r.ok for r in results) else 1


def build_parser():
    """Argument parser with one sub-command per verb."""
    parser = argparse.ArgumentParser(
        prog="pyspecenergy",
        description="Spectra, energies and incidence bounds over F_p.",
        epilog=__doc__.split("\n\n", 2)[2],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at INFO level")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="large spectrum Spec_eps(A)")
    _add_set_arguments(p)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--method", choices=("auto", "direct", "fast"), default="auto")
    p.add_argument("--out", help="CSV of (r, magnitude)")
    p.add_argument("--table", help="CSV of the full transform (xi, re, im, mag2)")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("energy", help="additive, multiplicative, balanced, sigma or C4 energies")
    _add_set_arguments(p)
    p.add_argument("--kind", choices=ENERGY_KINDS, default="add")
    p.add_argument("--k", type=int, default=2, help="moment of r_{A/A} for --kind mult")
    p.add_argument("--method", choices=("brute", "convolution", "fourier"), default="convolution")
    p.add_argument("--out", help="representation CSV (add, mult) or JSON value")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("subgroup", help="multiplicative subgroup and its cosets")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d", type=int, required=True, help="order, a divisor of p - 1")
    p.add_argument("--out", help="set file of the subgroup")
    p.set_defaults(func=cmd_subgroup)

    p = sub.add_parser("incidence", help="incidence counts and bounds of a scene file")
    p.add_argument("--scene", required=True)
    p.add_argument("--check", choices=("count", "vinh", "misha"), default="count")
    p.add_argument("--dual", action="store_true", help="dualize when |P| > |Pi|")
    p.set_defaults(func=cmd_incidence)

    p = sub.add_parser("verify", help="verify one theorem on one instance")
    _add_set_arguments(p)
    p.add_argument("--theorem", choices=THEOREM_IDS, required=True)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--d", type=int, help="subgroup order for the subgroup and coset families")
    p.add_argument("--eps", type=float, default=0.5)
    p.add_argument("--r-rule", choices=R_RULES[:2], default="full_spectrum")
    p.add_argument("--incidence-size", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="CSV row (JSON-lines mirror written alongside)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run a configured sweep")
    p.add_argument("--config", help="key = value sweep file; defaults when omitted")
    p.add_argument("--jobs", type=int, help="worker processes")
    p.add_argument("--bless", action="store_true", help="overwrite the baseline")
    p.add_argument("--out", help="CSV output, overrides the config")
    p.add_argument("--baseline", help="baseline JSON, overrides the config")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="exact-identity suite")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    """
    Run the command line.

    Parameters
    ----------
    argv : list of str, optional
        defaults to sys.argv[1:].

    Returns
    -------
    int
        exit status.

    """
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except UsageError as e:
        parser.error(str(e))
    except (SpecEnergyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
