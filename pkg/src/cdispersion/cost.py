"""The c-dispersion objective.

``cost_point`` is the sum of the ``c`` smallest distances from a point to the
other members of a subset, and ``cost_set`` is the minimum of that over the
subset. Ties among equidistant neighbours do not matter because only the
multiset of distance values enters the sum.

All sums go through :func:`math.fsum`, which is correctly rounded and so
independent of summation order. The greedy solver's incremental bookkeeping
and the brute-force oracles rely on this to produce bit-identical costs.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    IndexOutOfRange,
    InvalidParams,
    PointNotInSubset,
    SubsetTooSmall,
)


def nearest_sum(values: Iterable[float], c: int) -> float:
    """Sum of the ``c`` smallest values (all of them if fewer)."""
    return math.fsum(heapq.nsmallest(c, values))


def as_subset(S, n: int) -> tuple:
    """Normalize an index collection to a sorted tuple, rejecting repeats and bad indices."""
    out = tuple(sorted(int(i) for i in S))
    if len(set(out)) != len(out):
        raise ValueError(f"subset contains repeated indices: {out}")
    if out and (out[0] < 0 or out[-1] >= n):
        raise IndexOutOfRange(f"subset {out} has indices outside [0, {n})")
    return out


def check_c(c) -> int:
    if isinstance(c, bool) or int(c) != c or c < 1:
        raise InvalidParams(f"c must be a positive integer, got {c!r}")
    return int(c)


@dataclass(frozen=True)
class CostProfile:
    subset: tuple
    c: int
    per_point: tuple  # ((p, cost_c(p, S)), ...) in subset order
    min_point: int
    min_value: float

    def costs(self) -> dict:
        return dict(self.per_point)


def cost_point(instance, p: int, S, c: int) -> float:
    """Sum of distances from ``p`` to its ``c`` nearest points in ``S \\ {p}``."""
    c = check_c(c)
    S = as_subset(S, instance.n)
    if not 0 <= p < instance.n:
        raise IndexOutOfRange(f"point {p} outside [0, {instance.n})")
    if len(S) < c + 1:
        raise SubsetTooSmall(f"|S| = {len(S)} < c + 1 = {c + 1}")
    if p not in S:
        raise PointNotInSubset(f"point {p} is not in {S}")
    row = instance.rows[p]
    return nearest_sum((row[q] for q in S if q != p), c)


def cost_set(instance, S, c: int) -> CostProfile:
    c = check_c(c)
    S = as_subset(S, instance.n)
    if len(S) < c + 1:
        raise SubsetTooSmall(f"|S| = {len(S)} < c + 1 = {c + 1}")
    rows = instance.rows
    per_point = []
    best_p, best = -1, math.inf
    for p in S:
        row = rows[p]
        v = nearest_sum((row[q] for q in S if q != p), c)
        per_point.append((p, v))
        if v < best:
            best_p, best = p, v
    return CostProfile(S, c, tuple(per_point), best_p, best)
