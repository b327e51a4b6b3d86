"""Greedy-versus-exact ratio harness and greedy phase timing."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .errors import ApproximationViolation, BudgetExceeded
from .exact import EXACT_BUDGET, exact_solve
from .greedy import _Frontier, best_extension, greedy_solve, seed_enumeration
from .instances import EUCLIDEAN, RANDOM_METRIC, GeneratorSpec, generate
from .io import fmt
from .rng import SplitMix64
from .solution import SolveParams, Solution

RATIO_TOL = 1e-9
TSV_COLUMNS = ("generator", "n", "c", "k", "greedy_cost", "exact_cost", "ratio", "greedy_ms", "exact_ms")


@dataclass(frozen=True)
class RatioRecord:
    spec: GeneratorSpec
    c: int
    k: int
    greedy_cost: float
    exact_cost: float | None
    ratio: float | None
    greedy_ms: float
    exact_ms: float | None
    error: str | None = None

    @property
    def within_bound(self) -> bool:
        return self.ratio is None or self.ratio <= 2 * self.c + RATIO_TOL


def _ratio(exact_cost, greedy_cost):
    if greedy_cost == 0:
        return 1.0 if exact_cost == 0 else math.inf
    return exact_cost / greedy_cost


def run_cases(cases, *, budget: int = EXACT_BUDGET, threads: int = 1, check: bool = True):
    """Run greedy and exact on each ``(spec, c, k)`` case, keeping input order.

    A case whose exact enumeration exceeds ``budget`` gets a record with
    ``exact_cost=None`` and the suite continues. With ``check=True``,
    :class:`ApproximationViolation` is raised at the end if any ratio exceeds
    ``2c + 1e-9``.
    """
    records = []
    cache = {}
    for spec, c, k in cases:
        if spec not in cache:
            cache[spec] = generate(spec)
        inst = cache[spec]
        params = SolveParams(c, k)
        t0 = time.perf_counter()
        sol, _ = greedy_solve(inst, params, threads=threads)
        greedy_ms = (time.perf_counter() - t0) * 1e3
        try:
            t0 = time.perf_counter()
            best = exact_solve(inst, params, budget=budget, threads=threads)
            exact_ms = (time.perf_counter() - t0) * 1e3
        except BudgetExceeded as exc:
            records.append(RatioRecord(spec, c, k, sol.cost, None, None, greedy_ms, None, str(exc)))
            continue
        records.append(RatioRecord(spec, c, k, sol.cost, best.cost,
                                   _ratio(best.cost, sol.cost), greedy_ms, exact_ms))
    if check:
        bad = [r for r in records if not r.within_bound]
        if bad:
            raise ApproximationViolation(bad)
    return records


def run_ratio_suite(specs, c_list, k_list, budget: int = EXACT_BUDGET, *, threads: int = 1):
    """Every combination of spec, c and k that satisfies ``c+1 <= k <= n``."""
    cases = [(s, c, k) for s in specs for c in c_list for k in k_list if c + 1 <= k <= s.n]
    return run_cases(cases, budget=budget, threads=threads)


def default_cases(count: int = 200):
    """The fixed acceptance suite.

    Case ``i`` alternates between Euclidean and random-metric generators and
    cycles ``c`` through 1, 2, 3. It draws ``n`` in ``[c+2, 12]`` and ``k`` in
    ``[c+1, min(6, n)]`` from ``SplitMix64(i)``, and the instance seed is
    ``1000 + i``.
    """
    cases = []
    for i in range(count):
        kind = EUCLIDEAN if i % 2 == 0 else RANDOM_METRIC
        c = 1 + (i // 2) % 3
        rng = SplitMix64(i)
        n = rng.integer(c + 2, 12)
        k = rng.integer(c + 1, min(6, n))
        cases.append((GeneratorSpec(kind, n, 1000 + i), c, k))
    return cases


def records_to_tsv(records) -> str:
    out = ["\t".join(TSV_COLUMNS)]
    for r in records:
        row = [
            r.spec.label(), str(r.spec.n), str(r.c), str(r.k), fmt(r.greedy_cost),
            "NA" if r.exact_cost is None else fmt(r.exact_cost),
            "NA" if r.ratio is None else fmt(r.ratio),
            f"{r.greedy_ms:.3f}",
            "NA" if r.exact_ms is None else f"{r.exact_ms:.3f}",
        ]
        out.append("\t".join(row))
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class PhaseTiming:
    n: int
    c: int
    k: int
    seed_ms: float
    extend_ms: float
    naive_extend_ms: float
    cost: float

    @property
    def total_ms(self) -> float:
        return self.seed_ms + self.extend_ms


def time_greedy_phases(instance, params: SolveParams, *, threads: int = 1) -> PhaseTiming:
    """Time seed enumeration and both extension strategies separately."""
    params.check(instance.n)
    c, k = params.c, params.k
    t0 = time.perf_counter()
    seed, _ = seed_enumeration(instance, c, threads=threads)
    t1 = time.perf_counter()
    frontier = _Frontier(instance, seed, c)
    fast = list(seed)
    for _ in range(k - c - 1):
        p, cost = frontier.best()
        frontier.add(p)
        fast.append(p)
    t2 = time.perf_counter()
    slow = list(seed)
    for _ in range(k - c - 1):
        p, _ = best_extension(instance, slow, c)
        slow.append(p)
    t3 = time.perf_counter()
    if fast != slow:
        raise RuntimeError(f"extension strategies disagree: {fast} vs {slow}")
    cost = Solution.evaluate(instance, fast, c).cost
    return PhaseTiming(instance.n, c, k, (t1 - t0) * 1e3, (t2 - t1) * 1e3, (t3 - t2) * 1e3, cost)
