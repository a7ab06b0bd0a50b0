"""
Sweep configuration.

Flat ``key = value`` text, one key per line, '#' comments. List values
are comma separated. Example::

    primes = 101, 211, 421
    families = interval, random, subgroup, coset
    eps = 0.1, 0.25, 0.5, 0.9
    seeds = 0, 1
    theorems = main, e4, sigma, zero_sum
    output = sweep.csv
    baseline = baseline.json
"""
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Tuple

from sympy import isprime

# Our imports
from pyspecenergy.errors import ConfigError
from pyspecenergy.Harness.families import DEFAULT_SIZE_EXPONENT, FAMILIES
from pyspecenergy.Harness.theorems import (
    DEFAULT_INCIDENCE_SIZE,
    R_RULES,
    THEOREM_IDS,
)

DEFAULT_PRIMES = (101, 211, 421, 1009, 10007)
DEFAULT_EPS = (0.1, 0.25, 0.5, 0.9)
DEFAULT_THEOREMS = (
    "main",
    "e4",
    "sigma",
    "zero_sum",
    "tightness",
    "vinh",
    "misha",
    "line_point",
)


@dataclass(frozen=True)
class SweepConfig:
    """Parameters of one sweep; the cross product of the list fields is run."""

    primes: Tuple[int, ...] = DEFAULT_PRIMES
    families: Tuple[str, ...] = FAMILIES
    eps: Tuple[float, ...] = DEFAULT_EPS
    seeds: Tuple[int, ...] = (0,)
    theorems: Tuple[str, ...] = DEFAULT_THEOREMS
    output: Optional[str] = None
    baseline: Optional[str] = None
    r_rule: str = "full_spectrum"
    size_exponent: float = DEFAULT_SIZE_EXPONENT
    incidence_size: int = DEFAULT_INCIDENCE_SIZE
    jobs: int = 1

    def with_overrides(self, **kwargs):
        """Copy with the given fields replaced (None values ignored)."""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def _items(value):
    return [v.strip() for v in value.split(",") if v.strip()]


def _number(text, kind):
    if kind is float and "/" in text:
        return float(Fraction(text))
    return kind(text)


def _parse_prime(text):
    p = int(text)
    if p < 3 or not isprime(p):
        raise ValueError(f"{p} is not an odd prime")
    return p


def _parse_eps(text):
    eps = _number(text, float)
    if not 0.0 < eps <= 1.0:
        raise ValueError(f"eps {eps} outside (0, 1]")
    return eps


def _choice(allowed):
    def parse(text):
        if text not in allowed:
            raise ValueError(f"{text!r} not one of {', '.join(allowed)}")
        return text

    return parse


def _positive_int(text):
    n = int(text)
    if n < 1:
        raise ValueError(f"{n} is not positive")
    return n


def _path(text):
    return text or None


# key -> (element parser, is a list)
_KEYS = {
    "primes": (_parse_prime, True),
    "families": (_choice(FAMILIES), True),
    "eps": (_parse_eps, True),
    "seeds": (int, True),
    "theorems": (_choice(THEOREM_IDS), True),
    "output": (_path, False),
    "baseline": (_path, False),
    "r_rule": (_choice(R_RULES), False),
    "size_exponent": (lambda t: _number(t, float), False),
    "incidence_size": (_positive_int, False),
    "jobs": (_positive_int, False),
}


def parse_config(text, filename=None):
    """
    Parse configuration text.

    Parameters
    ----------
    text : str
    filename : str, optional
        used in error messages.

    Returns
    -------
    SweepConfig
        unspecified keys keep their defaults; an empty list is allowed and
        yields an empty sweep.

    """
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {line!r}", filename, lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _KEYS:
            raise ConfigError(f"unknown key {key!r}", filename, lineno)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", filename, lineno)
        parse, is_list = _KEYS[key]
        try:
            if is_list:
                values[key] = tuple(parse(item) for item in _items(value))
            else:
                values[key] = parse(value)
        except ValueError as e:
            raise ConfigError(f"bad value for {key}: {e}", filename, lineno)
    if "size_exponent" in values and not 0.0 < values["size_exponent"] <= 1.0:
        raise ConfigError("size_exponent must lie in (0, 1]", filename, None)
    return SweepConfig(**values)


def load_config(filename):
    """Read and parse a configuration file."""
    with open(filename) as f:
        return parse_config(f.read(), filename)
