"""Seeded instance generators."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .metric import from_matrix, from_points
from .reduction import graph_to_instance, random_graph
from .rng import SplitMix64

EUCLIDEAN = "euclidean_uniform"
RANDOM_METRIC = "random_metric"
GRAPH_REDUCTION = "graph_reduction"
KINDS = (EUCLIDEAN, RANDOM_METRIC, GRAPH_REDUCTION)

UNIT_BOX = (0.0, 0.0, 1.0, 1.0)
# integer edge weights keep the shortest-path closure exact
WEIGHT_RANGE = (1, 1000)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int
    seed: int
    box: tuple = UNIT_BOX
    edge_prob: float = 0.5

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.n < 2:
            raise ValueError("generators need n >= 2")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def label(self) -> str:
        if self.kind == GRAPH_REDUCTION:
            return f"{self.kind}:n={self.n}:seed={self.seed}:p={self.edge_prob:g}"
        return f"{self.kind}:n={self.n}:seed={self.seed}"


def gen_euclidean(n: int, seed: int, box=UNIT_BOX):
    """``n`` points uniform in ``box = (xmin, ymin, xmax, ymax)``, drawing x then y per point."""
    if n < 2:
        raise ValueError("n must be >= 2")
    x0, y0, x1, y1 = box
    rng = SplitMix64(seed)
    pts = []
    for _ in range(n):
        x = x0 + rng.uniform() * (x1 - x0)
        y = y0 + rng.uniform() * (y1 - y0)
        pts.append((x, y))
    return from_points(pts)


def gen_random_metric(n: int, seed: int):
    """Random integer weights on every pair, closed under shortest paths.

    Weights are drawn in ``WEIGHT_RANGE`` for each pair ``i < j`` in
    lexicographic order. Floyd-Warshall then enforces the triangle
    inequality. Integer arithmetic is exact in doubles, so the result passes
    validation at ``tol=0``.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    rng = SplitMix64(seed)
    lo, hi = WEIGHT_RANGE
    d = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            d[i, j] = d[j, i] = rng.integer(lo, hi)
    for l in range(n):
        d = np.minimum(d, d[:, l][:, None] + d[l, :][None, :])
    return from_matrix(d)


def generate(spec: GeneratorSpec):
    if spec.kind == EUCLIDEAN:
        return gen_euclidean(spec.n, spec.seed, spec.box)
    if spec.kind == RANDOM_METRIC:
        return gen_random_metric(spec.n, spec.seed)
    return graph_to_instance(random_graph(spec.n, spec.edge_prob, spec.seed))
