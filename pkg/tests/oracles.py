"""Independent reference implementations used only by the tests.

Nothing here imports the package's solvers. Sums are exact rationals,
rounded once to a double, which is the same value a correctly rounded
``fsum`` produces.
"""

from fractions import Fraction
from itertools import combinations


def exact_float_sum(values):
    return float(sum((Fraction(v) for v in values), Fraction(0)))


def naive_cost_point(d, p, S, c):
    dists = sorted(d[p][q] for q in S if q != p)
    return exact_float_sum(dists[:c])


def naive_cost_set(d, S, c):
    return min(naive_cost_point(d, p, S, c) for p in S)


def brute_force_optimum(d, k, c):
    """(cost, subset) maximizing the cost; lexicographically first on ties."""
    best = None
    for S in combinations(range(len(d)), k):
        v = naive_cost_set(d, S, c)
        if best is None or v > best[0]:
            best = (v, S)
    return best


def naive_greedy(d, k, c):
    """Textbook greedy with no pruning or incremental state."""
    seed = brute_force_optimum(d, c + 1, c)[1]
    chosen = list(seed)
    costs = [naive_cost_set(d, chosen, c)]
    while len(chosen) < k:
        best = None
        for p in range(len(d)):
            if p in chosen:
                continue
            v = naive_cost_set(d, chosen + [p], c)
            if best is None or v > best[0]:
                best = (v, p)
        chosen.append(best[1])
        costs.append(best[0])
    return sorted(chosen), chosen, costs


def has_independent_set(n, edges, k):
    edge_set = {frozenset(e) for e in edges}
    return any(
        all(frozenset(pair) not in edge_set for pair in combinations(S, 2))
        for S in combinations(range(n), k)
    )


def line_matrix(coords):
    return [[abs(a - b) for b in coords] for a in coords]
