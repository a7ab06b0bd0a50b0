"""Verification records and their CSV / JSON-lines emission."""
import csv
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Optional, Union

COLUMNS = (
    "theorem_id",
    "family",
    "p",
    "size",
    "delta",
    "eps",
    "r_size",
    "seed",
    "precondition_ok",
    "lhs",
    "rhs",
    "ratio",
    "ratio_log",
    "passed",
    "notes",
)


@dataclass(frozen=True)
class TheoremReport:
    """One verification record: instance, hypothesis, both sides, ratio."""

    theorem_id: str
    family: str
    p: int
    size: int
    delta: float
    eps: Optional[float]
    r_size: int
    seed: int
    precondition_ok: bool
    lhs: Union[int, float]
    rhs: float
    ratio: float
    ratio_log: float
    passed: Optional[bool] = None
    notes: str = ""
    extras: dict = field(default_factory=dict)

    def sort_key(self):
        """Emission order (theorem_id, p, family, seed, eps)."""
        return (self.theorem_id, self.p, self.family, self.seed, self.eps or 0.0)


def ratio_of(lhs, rhs):
    """lhs / rhs; 0 for 0/0 and infinity for a positive lhs over 0."""
    if rhs > 0:
        return float(lhs) / rhs
    return 0.0 if lhs <= 0 else math.inf


def make_report(
    theorem_id,
    A,
    lhs,
    rhs,
    *,
    family="explicit",
    eps=None,
    r_size=0,
    seed=0,
    precondition_ok=True,
    passed=None,
    notes=(),
    extras=None,
):
    """
    Assemble a TheoremReport, deriving ratio and its log-normalized form.

    Parameters
    ----------
    theorem_id : str
    A : FpSet
        the instance set (gives p, |A| and delta).
    lhs : int or float
    rhs : float
    notes : iterable of str, optional
        joined with '; '.

    Returns
    -------
    TheoremReport

    """
    ratio = ratio_of(lhs, rhs)
    log_size = math.log2(A.size) if A.size > 1 else 0.0
    return TheoremReport(
        theorem_id=theorem_id,
        family=family,
        p=A.p,
        size=A.size,
        delta=A.size / A.p,
        eps=eps,
        r_size=int(r_size),
        seed=int(seed),
        precondition_ok=bool(precondition_ok),
        lhs=lhs,
        rhs=float(rhs),
        ratio=ratio,
        ratio_log=ratio / max(1.0, log_size) ** 2,
        passed=passed,
        notes="; ".join(notes),
        extras=dict(extras or {}),
    )


def format_value(value):
    """Text form used in every emitted table (12 significant digits)."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _json_value(value):
    if isinstance(value, float):
        # strict JSON has no Infinity or NaN
        return float(f"{value:.12g}") if math.isfinite(value) else str(value)
    if isinstance(value, dict):
        return {k: _json_value(v) for k, v in sorted(value.items())}
    return value


def write_csv(reports, filename):
    """Write reports as CSV with the fixed COLUMNS order."""
    with open(filename, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(COLUMNS)
        for report in reports:
            writer.writerow([format_value(getattr(report, c)) for c in COLUMNS])


def to_json_line(report):
    """One JSON object per report, keys sorted, extras included."""
    data = {k: _json_value(v) for k, v in asdict(report).items()}
    return json.dumps(data, sort_keys=True)


def write_jsonl(reports, filename):
    """Write the JSON-lines mirror of write_csv."""
    with open(filename, "w") as f:
        for report in reports:
            f.write(to_json_line(report) + "\n")


def summarize(reports):
    """
    Max ratio per (theorem_id, family).

    Returns
    -------
    dict
        "<theorem_id>/<family>" -> max ratio over finite values.

    """
    summary = {}
    for report in reports:
        if not math.isfinite(report.ratio):
            continue
        key = f"{report.theorem_id}/{report.family}"
        summary[key] = max(summary.get(key, -math.inf), report.ratio)
    return dict(sorted(summary.items()))
