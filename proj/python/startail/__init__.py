"""Upper tails of star counts in G(n, p): rates, exact oracles and simulation."""

import json

from ._startail import (
    CriticalConstants,
    DomainError,
    GuardError,
    StarParams,
    TailEstimate,
    VariationalSolution,
    binom_point_lower_log,
    chernoff_upper_log,
    convex_sum_min,
    count_graphs_with_degrees,
    critical_constants,
    entropy_hp,
    exact_gnp_star_tail,
    exact_iid_tail,
    f_alpha,
    naive_tail,
    phi,
    phi_order,
    psi,
    run_suite,
    solve,
    tilted_tail,
)
from . import _startail


def classify_regime(params, window=4.0):
    return json.loads(_startail.classify_regime_json(params, window))


def rate_report(params, eps, window=4.0):
    return json.loads(_startail.rate_report_json(params, eps, window))


__all__ = [
    "CriticalConstants",
    "DomainError",
    "GuardError",
    "StarParams",
    "TailEstimate",
    "VariationalSolution",
    "binom_point_lower_log",
    "chernoff_upper_log",
    "classify_regime",
    "convex_sum_min",
    "count_graphs_with_degrees",
    "critical_constants",
    "entropy_hp",
    "exact_gnp_star_tail",
    "exact_iid_tail",
    "f_alpha",
    "naive_tail",
    "phi",
    "phi_order",
    "psi",
    "rate_report",
    "run_suite",
    "solve",
    "tilted_tail",
]
