"""Closed-form chain-count bounds and empirical growth-exponent fits.

All bounds are evaluated with their suppressed constant set to 1.  Each
bound is a sum of monomial terms ``log2(n)**a * n**b * t**c * r**e`` whose
exponents are kept as exact fractions, so exponent comparisons are exact.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .chains import DotTable, count_distinct, count_walks, max_pair_count
from .constructions import (generate_axes2d, generate_lenz3d, generate_prop3,
                            generate_random_disk)
from .geometry import ChainType, GeometryError

BOUND_IDS = (
    "thm-main", "cor-starlike", "cor-lightlines", "cor-sadapt", "cor-hidim",
    "hinge", "single-dot", "prop-lower", "fk-distance",
)

_REQUIRED = {
    "thm-main": ("n", "k"),
    "cor-starlike": ("n", "k"),
    "cor-lightlines": ("n", "k", "t"),
    "cor-sadapt": ("n", "k", "s"),
    "cor-hidim": ("n", "k", "r", "t", "d"),
    "hinge": ("n",),
    "single-dot": ("n",),
    "prop-lower": ("n", "k"),
    "fk-distance": ("n", "k"),
}

DEFAULT_EPS = Fraction(1, 100)
DEFAULT_SLACK = 0.15


def exact(x) -> Fraction:
    """Exact fraction for an exponent parameter; floats go through ``repr``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


@dataclass(frozen=True)
class Term:
    n: Fraction = Fraction(0)
    t: Fraction = Fraction(0)
    r: Fraction = Fraction(0)
    log2n: Fraction = Fraction(0)

    def log_value(self, n: float, t: float = 1.0, r: float = 1.0) -> float:
        out = float(self.n) * math.log(n)
        if self.t:
            out += float(self.t) * math.log(t)
        if self.r:
            out += float(self.r) * math.log(r)
        if self.log2n:
            out += float(self.log2n) * math.log(math.log2(n))
        return out

    def in_n(self, t_power: Fraction = Fraction(0), r_power: Fraction = Fraction(0)) -> Tuple[Fraction, Fraction]:
        """(n-exponent, log-exponent) after substituting ``t = n**t_power`` etc."""
        return self.n + self.t * t_power + self.r * r_power, self.log2n

    def to_record(self) -> Dict[str, str]:
        return {name: str(getattr(self, name)) for name in ("n", "t", "r", "log2n")}


@dataclass(frozen=True)
class BoundSpec:
    id: str
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.id not in BOUND_IDS:
            raise GeometryError(f"unknown bound id {self.id!r}")
        missing = [p for p in _REQUIRED[self.id] if self.params.get(p) is None]
        if missing:
            raise GeometryError(f"bound {self.id} needs parameter(s): {', '.join(missing)}")
        k = self.params.get("k")
        if k is not None and int(k) < 1:
            raise GeometryError("k must be >= 1")
        if exact(self.params.get("eps", DEFAULT_EPS)) < 0:
            raise GeometryError("eps must be >= 0")

    def get(self, name, default=None):
        v = self.params.get(name)
        return default if v is None else v


@dataclass(frozen=True)
class BoundValue:
    id: str
    terms: Tuple[Term, ...]
    value: float  # largest term
    total: float  # sum of terms
    log_value: float

    @property
    def n_exponent(self) -> Fraction:
        """Largest power of n among the terms, with t, r held fixed."""
        return max(term.n for term in self.terms)

    def to_record(self) -> Dict[str, Any]:
        return {
            "bound": self.id,
            "value": self.value,
            "total": self.total,
            "log_value": self.log_value,
            "n_exponent": str(self.n_exponent),
            "terms": [term.to_record() for term in self.terms],
        }


def _terms(spec: BoundSpec) -> List[Term]:
    F = Fraction
    k = int(spec.get("k", 2))
    eps = exact(spec.get("eps", DEFAULT_EPS))
    cls = k % 3
    bid = spec.id

    if bid == "thm-main":
        return [Term(n=F(2 * (k + 1), 3))]
    if bid == "hinge":
        return [Term(n=F(2))]
    if bid == "single-dot":
        return [Term(n=F(4, 3))]
    if bid == "prop-lower":
        return [Term(n=F(-(-(k + 1) // 2)))]
    if bid == "cor-starlike":
        return [Term(n={0: F(k + 3, 3), 1: F(k + 3, 3) + eps, 2: F(k + 4, 3)}[cls])]
    if bid == "fk-distance":
        if cls == 1:
            u2 = exact(spec.get("u2_exponent", F(4, 3)))
            return [Term(n=F(k - 1, 3) + eps + u2)]
        return [Term(n={0: F(k + 3, 3), 2: F(k + 4, 3)}[cls])]
    if bid in ("cor-lightlines", "cor-sadapt"):
        log_e, t_e, n_e = {
            0: (F(2 * k - 6, 3), F(k - 3, 3), F(4 * k + 12, 9)),
            1: (F(2 * k - 2, 3), F(k - 1, 3), F(4 * k + 8, 9)),
            2: (F(2 * k + 2, 3), F(k + 1, 3), F(4 * k + 4, 9)),
        }[cls]
        if bid == "cor-lightlines":
            return [Term(n=n_e, t=t_e, log2n=log_e)]
        s = exact(spec.get("s"))
        return [Term(n=n_e + t_e / s, log2n=log_e)]
    if bid == "cor-hidim":
        d = int(spec.get("d"))
        den = 6 * d - 3
        if cls == 0:
            return [
                Term(n=F(k + 3, 3), r=F(k - 3, 3), t=F(2)),
                Term(n=F((4 * d - 3) * (k - 1) + 18 * d - 8, den) + eps,
                     r=F(k - 3, 3), t=F(2 * d - 2, 2 * d - 1)),
            ]
        if cls == 1:
            return [
                Term(n=F(k + 2, 3), r=F(k - 1, 3), t=F(1)),
                Term(n=F((4 * d - 3) * (k - 1) + 9 * d - 6, den) + eps,
                     r=F(k - 1, 3), t=F(d - 1, 2 * d - 1)),
            ]
        return [
            Term(n=F(k + 1, 3), t=F(2 * k + 2, 3)),
            Term(n=F((4 * d - 3) * (k + 1), den) + eps, t=F((2 * d - 2) * (k + 1), den) + eps),
            Term(n=F(k + 1, 3), r=F(k + 1, 3)),
        ]
    raise GeometryError(f"unknown bound id {bid!r}")


def bound_terms(spec: BoundSpec) -> Tuple[Term, ...]:
    return tuple(_terms(spec))


def evaluate_bound(spec: BoundSpec) -> BoundValue:
    """Numeric value (constant 1) and exponent breakdown of a bound."""
    n = float(spec.get("n"))
    if n < 2:
        raise GeometryError("bounds are evaluated for n >= 2")
    t = float(spec.get("t", 1))
    r = float(spec.get("r", 1))
    terms = bound_terms(spec)
    logs = [term.log_value(n, t, r) for term in terms]
    top = max(logs)
    total_log = top + math.log(sum(math.exp(v - top) for v in logs))

    def safe_exp(v):
        try:
            return math.exp(v)
        except OverflowError:
            return math.inf

    return BoundValue(spec.id, terms, safe_exp(top), safe_exp(total_log), top)


# -- growth fits -------------------------------------------------------------

@dataclass(frozen=True)
class FitReport:
    slope: float
    intercept: float
    r_squared: float
    samples: Tuple[Tuple[int, int], ...]

    def to_record(self) -> Dict[str, Any]:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "samples": [[n, str(c)] for n, c in self.samples],
        }


def fit_growth_exponent(samples: Sequence[Tuple[int, int]]) -> FitReport:
    """Least-squares line through ``(ln n, ln count)``."""
    samples = tuple((int(n), int(c)) for n, c in samples)
    if len(samples) < 3:
        raise ValueError("need at least 3 samples")
    ns = [n for n, _ in samples]
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("sample sizes must be strictly increasing")
    if any(c <= 0 for _, c in samples) or ns[0] <= 0:
        raise ValueError("sizes and counts must be positive")
    x = np.log(np.array(ns, dtype=float))
    y = np.array([math.log(c) for _, c in samples])
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    ss_res = float(np.sum(resid ** 2))
    r2 = 1.0 if ss_tot == 0 else max(0.0, min(1.0, 1.0 - ss_res / ss_tot))
    return FitReport(float(slope), float(intercept), r2, samples)


# -- generator -> count -> fit -> compare -----------------------------------

FAMILIES = ("prop3", "axes2d", "lenz3d", "random_disk")
MODES = ("repeats", "distinct")


@dataclass(frozen=True)
class SweepRow:
    n: int
    count_with_repeats: int
    count_distinct: int
    elapsed_ms: float


@dataclass(frozen=True)
class VerifyReport:
    family: str
    k: int
    mode: str
    direction: str
    bound: Optional[str]
    target_exponent: Fraction
    slack: float
    rows: Tuple[SweepRow, ...]
    fit: FitReport
    passed: bool

    def to_record(self) -> Dict[str, Any]:
        return {
            "family": self.family,
            "k": self.k,
            "mode": self.mode,
            "direction": self.direction,
            "bound": self.bound,
            "target_exponent": str(self.target_exponent),
            "target_exponent_float": float(self.target_exponent),
            "slack": self.slack,
            "fitted_exponent": self.fit.slope,
            "fit": self.fit.to_record(),
            "rows": [
                {"n": r.n, "count_with_repeats": str(r.count_with_repeats),
                 "count_distinct": str(r.count_distinct), "elapsed_ms": r.elapsed_ms}
                for r in self.rows
            ],
            "verdict": "pass" if self.passed else "fail",
        }


def family_instance(family: str, n: int, k: int, alpha1=1, alphas=None,
                    seed: int = 0, denom: Optional[int] = None):
    """Point set and chain type for one sweep size of a named family.

    ``axes2d`` uses its all-zero type unless ``alphas`` gives a nonzero
    surrogate.  ``random_disk`` uses ``denom = n`` by default and the most
    frequent nonzero dot value of the sample, repeated ``k`` times.
    """
    if family == "prop3":
        g = generate_prop3(n, k, alpha1)
        return g.set, g.chain_type
    if family == "axes2d":
        g = generate_axes2d(n, k)
        t = ChainType(tuple(alphas)) if alphas is not None else g.chain_type
        return g.set, t
    if family == "lenz3d":
        t = ChainType(tuple(alphas)) if alphas is not None else ChainType(tuple(range(1, k + 1)))
        g = generate_lenz3d(n, k, t)
        return g.set, t
    if family == "random_disk":
        E = generate_random_disk(n, seed=seed, denom=denom or n)
        if alphas is not None:
            return E, ChainType(tuple(alphas))
        alpha, _ = max_pair_count(E)
        if alpha is None:
            raise GeometryError("random set has no nonzero dot values")
        return E, ChainType((alpha,) * k)
    raise GeometryError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def default_target(family: str, k: int, direction: str) -> Fraction:
    if direction == "lower":
        if family == "prop3":
            return Fraction((k + 2) // 2)
        if family in ("axes2d", "lenz3d"):
            return Fraction(k + 1)
        raise GeometryError(f"family {family!r} has no promised lower exponent")
    return Fraction(2 * (k + 1), 3)


def run_sweep(family: str, k: int, sweep: Sequence[int], distinct: bool = True,
              **family_kwargs) -> List[SweepRow]:
    rows = []
    for n in sweep:
        start = time.perf_counter()
        E, t = family_instance(family, n, k, **family_kwargs)
        table = DotTable(E)
        reps = count_walks(table, t)
        dist = count_distinct(table, t) if distinct else 0
        rows.append(SweepRow(n, reps, dist, round((time.perf_counter() - start) * 1000, 3)))
    return rows


def verify_family(family: str, k: int, sweep: Sequence[int], bound: Optional[str] = None,
                  direction: str = "upper", slack: float = DEFAULT_SLACK,
                  mode: str = "repeats", bound_params: Optional[Mapping[str, Any]] = None,
                  **family_kwargs) -> VerifyReport:
    """Generate each sweep size, count, fit the exponent and compare it.

    Upper checks pass when the fitted slope is at most the target exponent
    plus ``slack``; lower checks when it is at least the target minus
    ``slack``.  The target is the bound's n-exponent, or the family's own
    promised exponent when no bound is named.
    """
    if direction not in ("upper", "lower"):
        raise ValueError("direction must be 'upper' or 'lower'")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    sweep = list(sweep)
    if len(sweep) < 3:
        raise ValueError("verification needs at least 3 sweep sizes")
    if bound is not None:
        params = {"n": max(sweep), "k": k}
        params.update(bound_params or {})
        target = evaluate_bound(BoundSpec(bound, params)).n_exponent
    else:
        target = default_target(family, k, direction)
    rows = run_sweep(family, k, sweep, **family_kwargs)
    key = "count_with_repeats" if mode == "repeats" else "count_distinct"
    fit = fit_growth_exponent([(r.n, getattr(r, key)) for r in rows])
    if direction == "upper":
        passed = fit.slope <= float(target) + slack
    else:
        passed = fit.slope >= float(target) - slack
    return VerifyReport(family, k, mode, direction, bound, target, slack, tuple(rows), fit, passed)
