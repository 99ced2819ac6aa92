"""Shared oracle helpers for the test suite.

These deliberately avoid the fast code paths they are used to check:
the simultaneous-core oracle filters every partition up to the extremal
size through the hook-length criterion for both moduli.
"""

from __future__ import annotations

import math

from stcores import is_s_core_by_hooks, partitions_up_to, size
from stcores.abacus import core_from_s_set, make_sset
from stcores.alcoves import rhomboid_points
from stcores.partitions import Partition


def brute_st_cores(s: int, t: int) -> list[Partition]:
    """All (s,t)-cores by filtering every partition up to the extremal size."""
    bound = (s * s - 1) * (t * t - 1) // 24
    found = [
        p
        for p in partitions_up_to(bound)
        if is_s_core_by_hooks(p, s) and is_s_core_by_hooks(p, t)
    ]
    found.sort(key=lambda p: (size(p), p.parts))
    return found


def st_cores_by_difference_scan(s: int, t: int) -> list[Partition]:
    """(s,t)-cores via the gap-vector scan of the rhomboid (second oracle)."""
    assert math.gcd(s, t) == 1
    from stcores import is_s_core

    cores = []
    for p in rhomboid_points(s, t):
        lam = core_from_s_set(make_sset(s, p.coords))
        if is_s_core(lam, t):
            cores.append(lam)
    cores.sort(key=lambda p: (size(p), p.parts))
    return cores
