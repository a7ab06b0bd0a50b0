"""sweep script."""
from pyspecenergy.Harness.sweep import sweep
from pyspecenergy.Harness.sweepconfig import load_config

# worker processes are spawned, so the sweep must sit under the main guard
if __name__ == "__main__":
    config = load_config("default_sweep.cfg")
    reports, summary, problems = sweep(config)

    print("Max ratio per theorem/family:")
    for key, value in summary.items():
        print(key, ": ", value)

    print("Rows with a failed hard check:")
    for r in reports:
        if r.passed is False:
            print(r.theorem_id, r.family, r.p, r.eps, r.seed)

    print("Baseline regressions:")
    for message in problems:
        print(message)
