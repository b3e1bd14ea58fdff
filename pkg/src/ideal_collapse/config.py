"""Desk-scale limits and runtime switches."""

import os

DEFAULT_MAX_POINTS = 10**7
MAX_POINTS_ENV = "IDEAL_COLLAPSE_MAX_POINTS"

# total-degree ceilings for polynomial products and the collapse chain
MAX_DEGREE = 2**20
WARN_DEGREE = 2**12

# re-verify every cofactor certificate as it is built
PARANOID = True


def max_points() -> int:
    raw = os.environ.get(MAX_POINTS_ENV)
    if raw:
        return int(raw)
    return DEFAULT_MAX_POINTS
