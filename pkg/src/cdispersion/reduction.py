"""Independent set to c-dispersion reduction, with brute-force oracles on both sides.

Vertices become points. Adjacent vertices are at distance 1 and every
other pair is at distance 2. A graph has an independent set of size ``k``
exactly when the image instance has a ``k``-subset of cost ``2c``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .exact import EXACT_BUDGET, exact_solve
from .errors import BudgetExceeded, CostNot2c, GraphError, GraphTooSmall, NotReductionImage
from .metric import from_matrix
from .rng import SplitMix64
from .solution import SolveParams


@dataclass(frozen=True)
class Graph:
    n_vertices: int
    edges: frozenset  # of (u, v) with u < v

    def __post_init__(self):
        if self.n_vertices < 1:
            raise GraphError("graph needs at least one vertex")
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n_vertices):
                raise GraphError(f"bad edge {e}: need 0 <= u < v < {self.n_vertices}")

    @classmethod
    def from_edges(cls, n_vertices: int, edges, *, allow_duplicates: bool = False) -> Graph:
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen and not allow_duplicates:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n_vertices, frozenset(seen))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, frozenset())

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list:
        return sorted(self.edges)


def is_independent(g: Graph, vertices) -> bool:
    return not any(g.has_edge(u, v) for u, v in combinations(sorted(vertices), 2))


def graph_to_instance(g: Graph):
    if g.n_vertices < 2:
        raise GraphTooSmall(f"need at least 2 vertices, got {g.n_vertices}")
    n = g.n_vertices
    mat = np.full((n, n), 2.0)
    np.fill_diagonal(mat, 0.0)
    for u, v in g.edges:
        mat[u, v] = mat[v, u] = 1.0
    return from_matrix(mat)


def independent_set_bruteforce(g: Graph, k: int, *, budget: int = EXACT_BUDGET):
    """Return ``(found, witness)``; the witness is the lexicographically first k-subset spanning no edge."""
    if not 1 <= k <= g.n_vertices:
        raise ValueError(f"k = {k} outside [1, {g.n_vertices}]")
    required = math.comb(g.n_vertices, k)
    if required > budget:
        raise BudgetExceeded(required, budget)
    for combo in combinations(range(g.n_vertices), k):
        if is_independent(g, combo):
            return True, combo
    return False, None


def check_reduction_image(instance) -> None:
    d = instance.matrix
    off = ~np.eye(instance.n, dtype=bool)
    bad = np.argwhere(off & (d != 1.0) & (d != 2.0))
    if len(bad):
        i, j = (int(v) for v in bad[0])
        raise NotReductionImage(f"d({i},{j}) = {d[i, j]!r} is not 1 or 2")


def dispersion_decision(instance, c: int, k: int, *, budget: int = EXACT_BUDGET) -> bool:
    """Is there a k-subset of cost exactly ``2c``?

    On a reduction image no distance exceeds 2, so ``2c`` is the largest
    possible cost and comparing the exact optimum against it is sufficient.
    """
    check_reduction_image(instance)
    sol = exact_solve(instance, SolveParams(c, k), budget=budget)
    return sol.cost == 2 * c


def threshold_decision(instance, c: int, k: int, bound: float, *, budget: int = EXACT_BUDGET) -> bool:
    """General form: is the optimal cost at least ``bound``? Works on any instance."""
    return exact_solve(instance, SolveParams(c, k), budget=budget).cost >= bound


def solution_to_independent_set(sol) -> tuple:
    """Map a cost-``2c`` solution on a reduction image back to vertices (index preserving)."""
    if sol.cost != 2 * sol.c:
        raise CostNot2c(f"solution cost {sol.cost!r} != 2c = {2 * sol.c}")
    return tuple(sol.subset)


def all_graphs(n: int):
    """Yield every simple graph on ``n`` labelled vertices (2^C(n,2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); one uniform draw per vertex pair in lexicographic order."""
    rng = SplitMix64(seed)
    return Graph(n, frozenset(e for e in combinations(range(n), 2) if rng.uniform() < p))
