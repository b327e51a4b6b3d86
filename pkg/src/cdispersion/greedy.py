"""Greedy 2c-approximation for c-dispersion.

The algorithm first picks the best ``(c+1)``-subset by exhaustive search,
then repeatedly adds the point that keeps ``cost_c`` of the grown set as
large as possible, until ``k`` points are chosen. Every tie goes to the
lowest index (lexicographically smallest tuple for the seed).
"""

from __future__ import annotations

import bisect
import math
from itertools import combinations

from . import _parallel
from .cost import as_subset, check_c, cost_set
from .errors import BudgetExceeded, InstanceTooSmall, NothingToAdd
from .solution import GreedyTrace, SolveParams, Solution

SEED_BUDGET = 10**9


def _seed_scan(rows, c, firsts):
    # In a (c+1)-subset each member's c nearest neighbours are all the others,
    # so no selection is needed. Stop scoring a candidate once its running
    # minimum can no longer beat the incumbent.
    n = len(rows)
    fsum = math.fsum
    best, best_combo, count = -math.inf, None, 0
    for i in firsts:
        for rest in combinations(range(i + 1, n), c):
            combo = (i,) + rest
            count += 1
            low = math.inf
            for p in combo:
                row = rows[p]
                v = fsum([row[q] for q in combo if q != p])
                if v < low:
                    low = v
                    if low <= best:
                        break
            if low > best:
                best, best_combo = low, combo
    return best, best_combo, count


def seed_enumeration(instance, c: int, *, budget: int = SEED_BUDGET, threads: int = 1):
    """Exhaustively find the ``(c+1)``-subset with maximum cost.

    Returns ``(subset, cost)``. Raises :class:`BudgetExceeded` when
    ``C(n, c+1)`` exceeds ``budget``.
    """
    c = check_c(c)
    n = instance.n
    if n < c + 1:
        raise InstanceTooSmall(f"n = {n} < c + 1 = {c + 1}")
    required = math.comb(n, c + 1)
    if required > budget:
        raise BudgetExceeded(required, budget)
    cost, combo, _ = _parallel.scan(_seed_scan, instance.rows, (c,), n - c, threads)
    return combo, cost


def best_extension(instance, S, c: int):
    """Return ``(p, cost)`` for the outside point whose addition keeps the cost highest.

    Recomputes ``cost_set`` from scratch for every candidate. ``greedy_solve``
    uses an incremental equivalent by default.
    """
    c = check_c(c)
    S = as_subset(S, instance.n)
    members = set(S)
    best_p, best = None, -math.inf
    for p in range(instance.n):
        if p in members:
            continue
        v = cost_set(instance, S + (p,), c).min_value
        if v > best:
            best_p, best = p, v
    if best_p is None:
        raise NothingToAdd(f"subset already covers all {instance.n} points")
    return best_p, best


class _Frontier:
    """Nearest-neighbour bookkeeping for incremental extension.

    For each member ``s``, ``near[s]`` is the sorted list of its ``c``
    smallest distances to the other members. For each outside point ``p``,
    ``cand[p]`` is the sorted list of its (up to) ``c`` smallest distances to
    the members. Adding ``p`` to ``S`` only changes ``near[s]`` when
    ``d(s,p)`` falls below ``near[s][-1]``, and the new value multiset is
    then ``near[s][:-1] + [d(s,p)]``.
    """

    def __init__(self, instance, seed, c):
        self.rows = instance.rows
        self.c = c
        self.members = list(seed)
        self.near = {}
        self.mcost = {}
        for s in seed:
            row = self.rows[s]
            self.near[s] = sorted(row[q] for q in seed if q != s)
            self.mcost[s] = math.fsum(self.near[s])
        self.cand = {}
        inside = set(seed)
        for p in range(instance.n):
            if p not in inside:
                row = self.rows[p]
                self.cand[p] = sorted(row[q] for q in seed)[:c]

    def best(self):
        rows, fsum = self.rows, math.fsum
        best_p, best = None, -math.inf
        for p in sorted(self.cand):
            val = fsum(self.cand[p])
            if val <= best:
                continue
            row = rows[p]
            for s in self.members:
                d = row[s]
                near = self.near[s]
                if d < near[-1]:
                    v = fsum(near[:-1] + [d])
                else:
                    v = self.mcost[s]
                if v < val:
                    val = v
                    if val <= best:
                        break
            if val > best:
                best_p, best = p, val
        if best_p is None:
            raise NothingToAdd("no candidates left")
        return best_p, best

    def add(self, p):
        rows, c = self.rows, self.c
        row = rows[p]
        for s in self.members:
            d = row[s]
            near = self.near[s]
            if d < near[-1]:
                near.pop()
                bisect.insort(near, d)
                self.mcost[s] = math.fsum(near)
        self.near[p] = self.cand.pop(p)
        self.mcost[p] = math.fsum(self.near[p])
        self.members.append(p)
        for q, lst in self.cand.items():
            d = rows[q][p]
            if len(lst) < c:
                bisect.insort(lst, d)
            elif d < lst[-1]:
                lst.pop()
                bisect.insort(lst, d)


def greedy_solve(instance, params: SolveParams, *, budget: int = SEED_BUDGET,
                 threads: int = 1, incremental: bool = True):
    """Run the greedy algorithm and return ``(Solution, GreedyTrace)``.

    With ``incremental=False`` every extension step goes through
    :func:`best_extension`. Both modes produce identical traces.
    """
    params.check(instance.n)
    c, k = params.c, params.k
    seed, seed_cost = seed_enumeration(instance, c, budget=budget, threads=threads)

    chosen = list(seed)
    steps = []
    frontier = _Frontier(instance, seed, c) if incremental else None
    for _ in range(k - (c + 1)):
        if frontier is not None:
            p, cost = frontier.best()
            frontier.add(p)
        else:
            p, cost = best_extension(instance, chosen, c)
        chosen.append(p)
        steps.append((p, cost))

    final = Solution.evaluate(instance, chosen, c)
    claimed = steps[-1][1] if steps else seed_cost
    if final.cost != claimed:
        raise RuntimeError(
            f"greedy bookkeeping drifted: tracked {claimed!r}, recomputed {final.cost!r}")
    return final, GreedyTrace(tuple(seed), seed_cost, tuple(steps), final)

