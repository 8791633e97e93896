"""Exact cyclic sieving checks over S_n."""

import json

from ._permsieve import (
    PermsieveError,
    equidistributed,
    map_apply,
    map_keys,
    map_orbits,
    parse,
    q_minus_one,
    run_criterion,
    scan,
    stat_eval,
    stat_gf,
    stat_keys,
)
from ._permsieve import csp_check as _csp_check


def csp_check(stat, map, n):
    """Verdict for (stat, map, n) as a dict."""
    return json.loads(_csp_check(stat, map, n))


__all__ = [
    "PermsieveError",
    "csp_check",
    "equidistributed",
    "map_apply",
    "map_keys",
    "map_orbits",
    "parse",
    "q_minus_one",
    "run_criterion",
    "scan",
    "stat_eval",
    "stat_gf",
    "stat_keys",
]
