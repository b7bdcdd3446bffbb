"""The global degree cap (n <= 8), optionally lowered via HILBCHAR_DEGREE_CAP."""

from __future__ import annotations

import os

DEGREE_CAP = 8


class DegreeCapError(ValueError):
    pass


def degree_cap() -> int:
    env = os.environ.get("HILBCHAR_DEGREE_CAP")
    if env:
        try:
            return max(0, min(DEGREE_CAP, int(env)))
        except ValueError:
            pass
    return DEGREE_CAP


def check_degree(n: int) -> None:
    cap = degree_cap()
    if n > cap:
        raise DegreeCapError(f"n = {n} exceeds the degree cap {cap}")
