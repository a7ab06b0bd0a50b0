"""
Sweep runner.

Runs the cross product theorem x prime x family x eps x seed of a
SweepConfig. Rows are independent, so they may run in a process pool;
output is sorted before emission and does not depend on scheduling.
"""
import logging
import multiprocessing
from dataclasses import replace
from itertools import product

# Our imports
from pyspecenergy.FieldArithmetic.primefield import make_field
from pyspecenergy.Harness.baseline import bless_or_check
from pyspecenergy.Harness.families import build_family
from pyspecenergy.Harness.report import summarize, write_csv, write_jsonl
from pyspecenergy.Harness.theorems import run_theorem

# theorems that only make sense on a multiplicative subgroup
SUBGROUP_ONLY = ("tightness",)


def sweep_tasks(config):
    """
    Tasks of a sweep in deterministic order.

    Parameters
    ----------
    config : SweepConfig

    Returns
    -------
    list of tuple
        (theorem_id, p, family, eps, seed, r_rule, size_exponent,
        incidence_size); subgroup-only theorems are paired with the
        subgroup family alone.

    """
    tasks = []
    grid = product(config.theorems, config.primes, config.families, config.eps, config.seeds)
    for theorem_id, p, family, eps, seed in grid:
        if theorem_id in SUBGROUP_ONLY and family != "subgroup":
            continue
        tasks.append(
            (
                theorem_id,
                p,
                family,
                eps,
                seed,
                config.r_rule,
                config.size_exponent,
                config.incidence_size,
            )
        )
    return tasks


def run_task(task):
    """Build the instance of one task and verify it."""
    theorem_id, p, family, eps, seed, r_rule, size_exponent, incidence_size = task
    field = make_field(p)
    A, _ = build_family(field, family, seed=seed, size_exponent=size_exponent)
    report = run_theorem(
        theorem_id,
        field,
        A,
        eps=eps,
        seed=seed,
        family=family,
        r_rule=r_rule,
        incidence_size=incidence_size,
    )
    if report.eps is None:
        # eps-free theorems still record their grid point
        report = replace(report, eps=eps)
    return report


def run_sweep(config, jobs=None):
    """
    Run every task of a sweep.

    Parameters
    ----------
    config : SweepConfig
    jobs : int, optional
        worker processes; defaults to config.jobs. 1 runs in-process.

    Returns
    -------
    list of TheoremReport
        sorted by (theorem_id, p, family, seed, eps).

    """
    logger = logging.getLogger(__name__)
    tasks = sweep_tasks(config)
    jobs = config.jobs if jobs is None else jobs
    logger.info(f"sweep: {len(tasks)} tasks on {jobs} worker(s)")
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.get_context("spawn").Pool(processes=jobs) as pool:
            reports = pool.map(run_task, tasks)
    else:
        reports = [run_task(task) for task in tasks]
    for report in reports:
        if not report.precondition_ok:
            logger.info(
                f"{report.theorem_id}/{report.family} p={report.p}: precondition not met"
            )
        if report.passed is False:
            logger.warning(
                f"{report.theorem_id}/{report.family} p={report.p} eps={report.eps}: hard check failed"
            )
    return sorted(reports, key=lambda r: r.sort_key())


def emit(reports, output):
    """Write the CSV table to output and its JSON-lines mirror next to it."""
    write_csv(reports, output)
    stem = output[:-4] if output.endswith(".csv") else output
    write_jsonl(reports, stem + ".jsonl")


def sweep(config, jobs=None, bless=False):
    """
    Run a sweep, emit its tables and apply the baseline.

    Parameters
    ----------
    config : SweepConfig
    jobs : int, optional
    bless : bool, optional
        overwrite the baseline with this run's summary.

    Returns
    -------
    tuple
        (reports, summary dict, list of regression messages).

    """
    reports = run_sweep(config, jobs)
    if config.output:
        emit(reports, config.output)
    problems = []
    if config.baseline:
        problems = bless_or_check(reports, config.baseline, bless=bless)
    return reports, summarize(reports), problems
