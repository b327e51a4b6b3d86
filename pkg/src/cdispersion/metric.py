"""Finite metric instances: construction, access and axiom checking."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    AsymmetricEntry,
    NegativeEntry,
    NonFiniteCoordinate,
    NonSquare,
    NonzeroDiagonal,
    TooFewPoints,
)

MATRIX = "matrix"
POINTS2D = "points2d"

# relative triangle tolerance used when the caller does not pass one
DEFAULT_RELATIVE_TOL = 1e-9


class MetricInstance:
    """An immutable set of ``n`` points with a dense symmetric distance matrix.

    Build instances with :func:`from_matrix` or :func:`from_points`; the
    constructor itself does no validation.

    ``rows`` holds the distances as nested tuples of Python floats. The
    solvers index it in tight loops, which is much faster than indexing the
    numpy array element by element.
    """

    __slots__ = ("n", "kind", "points", "labels", "_matrix", "rows")

    def __init__(self, matrix, kind=MATRIX, points=None, labels=None):
        matrix = np.array(matrix, dtype=np.float64)
        matrix.setflags(write=False)
        self._matrix = matrix
        self.n = matrix.shape[0]
        self.kind = kind
        self.points = points
        self.labels = tuple(labels) if labels is not None else None
        self.rows = tuple(tuple(float(x) for x in r) for r in matrix.tolist())

    @property
    def matrix(self) -> np.ndarray:
        """Read-only ``n x n`` distance matrix."""
        return self._matrix

    def distance(self, i: int, j: int) -> float:
        return self.rows[i][j]

    def max_distance(self) -> float:
        return float(self._matrix.max()) if self.n else 0.0

    def scaled(self, factor: float) -> MetricInstance:
        """Copy with every distance multiplied by ``factor`` (kept as an explicit matrix)."""
        if not factor > 0:
            raise ValueError("scale factor must be positive")
        return from_matrix(self._matrix * factor, labels=self.labels)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"MetricInstance(n={self.n}, kind={self.kind!r})"


def from_matrix(matrix, labels: Sequence[str] | None = None) -> MetricInstance:
    """Build an instance from an explicit distance matrix.

    Asymmetric input is rejected rather than symmetrized, and the first
    offending pair (row-major, upper triangle) is reported.
    """
    try:
        arr = np.array(matrix, dtype=np.float64)
    except ValueError as exc:  # ragged rows
        raise NonSquare(f"matrix is not rectangular: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    if n < 2:
        raise TooFewPoints(f"need at least 2 points, got {n}")
    bad = np.argwhere(~np.isfinite(arr) | (arr < 0))
    if len(bad):
        i, j = (int(v) for v in bad[0])
        raise NegativeEntry(i, j, float(arr[i, j]))
    diag = np.flatnonzero(np.diagonal(arr) != 0)
    if len(diag):
        raise NonzeroDiagonal(int(diag[0]))
    asym = np.argwhere(np.triu(arr != arr.T, 1))
    if len(asym):
        i, j = (int(v) for v in asym[0])
        raise AsymmetricEntry(i, j)
    _check_labels(labels, n)
    return MetricInstance(arr, MATRIX, labels=labels)


def from_points(points, labels: Sequence[str] | None = None) -> MetricInstance:
    """Build a planar Euclidean instance; distances are precomputed with ``math.hypot``."""
    pts = []
    for idx, pt in enumerate(points):
        if len(pt) != 2:
            raise NonFiniteCoordinate(f"point {idx} is not a coordinate pair: {pt!r}")
        x, y = float(pt[0]), float(pt[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise NonFiniteCoordinate(f"point {idx} has a non-finite coordinate: {pt!r}")
        pts.append((x, y))
    n = len(pts)
    if n < 2:
        raise TooFewPoints(f"need at least 2 points, got {n}")
    _check_labels(labels, n)
    mat = np.zeros((n, n))
    for i in range(n):
        xi, yi = pts[i]
        for j in range(i + 1, n):
            mat[i, j] = mat[j, i] = math.hypot(xi - pts[j][0], yi - pts[j][1])
    return MetricInstance(mat, POINTS2D, points=tuple(pts), labels=labels)


def _check_labels(labels, n):
    if labels is not None and len(labels) != n:
        raise ValueError(f"got {len(labels)} labels for {n} points")


@dataclass(frozen=True)
class MetricValidationReport:
    symmetric: bool
    identity_ok: bool
    triangle_violations: list = field(default_factory=list)
    max_gap: float = 0.0
    tol: float = 0.0
    # off-diagonal zero pairs (i < j); legal, reported for information only
    duplicate_pairs: list = field(default_factory=list)

    @property
    def positive(self) -> bool:
        return not self.duplicate_pairs

    @property
    def ok(self) -> bool:
        return self.symmetric and self.identity_ok and not self.triangle_violations


def validate_metric(instance: MetricInstance, tol: float | None = None) -> MetricValidationReport:
    """Check symmetry, zero diagonal and the triangle inequality over all ordered triples.

    A triple ``(i, l, j)`` is a violation when
    ``d(i,j) - d(i,l) - d(l,j) > tol``. With ``tol=None`` the tolerance is
    ``1e-9`` times the largest distance. ``max_gap`` is the largest gap over
    all triples, whether or not it exceeds ``tol``.
    """
    d = instance.matrix
    n = instance.n
    if tol is None:
        tol = DEFAULT_RELATIVE_TOL * instance.max_distance()
    if tol < 0:
        raise ValueError("tol must be nonnegative")

    violations = []
    max_gap = -math.inf
    for l in range(n):
        gap = d - d[:, l][:, None] - d[l, :][None, :]
        max_gap = max(max_gap, float(gap.max()))
        for i, j in np.argwhere(gap > tol):
            violations.append((int(i), l, int(j), float(gap[i, j])))
    violations.sort()

    iu = np.triu_indices(n, 1)
    dupes = [(int(i), int(j)) for i, j in zip(*iu) if d[i, j] == 0]
    return MetricValidationReport(
        symmetric=bool(np.array_equal(d, d.T)),
        identity_ok=bool(np.all(np.diagonal(d) == 0)),
        triangle_violations=violations,
        max_gap=max_gap,
        tol=tol,
        duplicate_pairs=dupes,
    )
