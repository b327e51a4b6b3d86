"""Brute-force optimum over all k-subsets, and the ball-containment checker.

The ball checker counts strict ("proper") containment in balls of radius
``cost / (2c)`` centred on the members of a candidate optimum. For a true
optimum in a metric space no ball may properly contain more than ``c`` of
the optimal points, and no point may lie properly inside more than ``c``
of the balls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from . import _parallel
from .cost import nearest_sum
from .errors import BudgetExceeded
from .solution import SolveParams, Solution

EXACT_BUDGET = 5 * 10**7


def _exact_scan(rows, k, c, firsts):
    n = len(rows)
    best, best_combo, count = -math.inf, None, 0
    for i in firsts:
        for rest in combinations(range(i + 1, n), k - 1):
            combo = (i,) + rest
            count += 1
            low = math.inf
            for p in combo:
                row = rows[p]
                v = nearest_sum((row[q] for q in combo if q != p), c)
                if v < low:
                    low = v
                    if low <= best:
                        break
            if low > best:
                best, best_combo = low, combo
    return best, best_combo, count


def exact_search(instance, params: SolveParams, *, budget: int = EXACT_BUDGET, threads: int = 1):
    """Like :func:`exact_solve` but also returns the number of subsets scored."""
    params.check(instance.n)
    n, k, c = instance.n, params.k, params.c
    required = math.comb(n, k)
    if required > budget:
        raise BudgetExceeded(required, budget)
    cost, combo, count = _parallel.scan(_exact_scan, instance.rows, (k, c), n - k + 1, threads)
    sol = Solution.evaluate(instance, combo, c)
    assert sol.cost == cost, (sol.cost, cost)
    return sol, count


def exact_solve(instance, params: SolveParams, *, budget: int = EXACT_BUDGET, threads: int = 1) -> Solution:
    """Optimal k-subset by full enumeration; ties go to the lexicographically smallest subset."""
    return exact_search(instance, params, budget=budget, threads=threads)[0]


@dataclass(frozen=True)
class BallReport:
    radius: float
    c: int
    contains_counts: tuple  # per point p: members q with d(p, q) < radius
    covered_counts: tuple   # per point s: balls B(q), q a member, containing s
    violations: tuple       # points whose count exceeds c
    strict: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations


def ball_check(instance, candidate: Solution, c: int, *, strict: bool = True) -> BallReport:
    """Count ball containments around ``candidate.subset`` for every point of the instance.

    ``strict=False`` switches to closed balls (``<=``); that variant is
    provided for exploration only.
    """
    radius = candidate.cost / (2 * c)
    rows = instance.rows
    members = candidate.subset
    inside = (lambda d: d < radius) if strict else (lambda d: d <= radius)

    contains = tuple(sum(1 for q in members if inside(rows[p][q])) for p in range(instance.n))
    covered = tuple(sum(1 for q in members if inside(rows[q][s])) for s in range(instance.n))
    bad = tuple(p for p in range(instance.n) if contains[p] > c or covered[p] > c)
    return BallReport(radius, c, contains, covered, bad, strict)
