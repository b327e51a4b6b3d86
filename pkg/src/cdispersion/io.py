"""Text formats for instances, solutions, graphs and ball reports.

Reals are written with 17 significant digits, which round-trips every
double exactly.
"""

from __future__ import annotations

from pathlib import Path

from .errors import FormatError, GraphError
from .metric import MATRIX, POINTS2D, from_matrix, from_points
from .reduction import Graph


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def _lines(text: str):
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


# -- instances -----------------------------------------------------------------

def format_instance(instance) -> str:
    if instance.kind == POINTS2D:
        out = [f"dispersion-instance v1 {POINTS2D} {instance.n}"]
        out += [f"{fmt(x)} {fmt(y)}" for x, y in instance.points]
    else:
        out = [f"dispersion-instance v1 {MATRIX} {instance.n}"]
        out += [" ".join(fmt(v) for v in row) for row in instance.rows]
    return "\n".join(out) + "\n"


def parse_instance(text: str):
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty instance file")
    head = lines[0].split()
    if len(head) != 4 or head[:2] != ["dispersion-instance", "v1"] or head[2] not in (MATRIX, POINTS2D):
        raise FormatError(f"bad instance header: {lines[0]!r}")
    try:
        n = int(head[3])
        body = [[float(tok) for tok in line.split()] for line in lines[1:]]
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if len(body) != n:
        raise FormatError(f"header says {n} rows, found {len(body)}")
    if head[2] == POINTS2D:
        if any(len(r) != 2 for r in body):
            raise FormatError("points2d rows must hold exactly two numbers")
        return from_points(body)
    return from_matrix(body)


def read_instance(path):
    return parse_instance(Path(path).read_text())


def write_instance(instance, path) -> None:
    Path(path).write_text(format_instance(instance))


# -- solutions -------------------------------------------------------------------

def format_solution(solution, trace=None) -> str:
    out = [
        "dispersion-solution v1",
        f"c {solution.c}",
        f"k {solution.k}",
        f"cost {fmt(solution.cost)}",
        "subset " + " ".join(str(i) for i in solution.subset),
    ]
    if trace is not None:
        out += [f"step {p} {fmt(cost)}" for p, cost in trace.steps]
    return "\n".join(out) + "\n"


def parse_solution(text: str) -> dict:
    """Parse a solution file into ``{"c", "k", "cost", "subset", "steps"}``."""
    lines = list(_lines(text))
    if not lines or lines[0] != "dispersion-solution v1":
        raise FormatError("bad solution header")
    out = {"steps": []}
    try:
        for line in lines[1:]:
            key, *vals = line.split()
            if key in ("c", "k"):
                out[key] = int(vals[0])
            elif key == "cost":
                out["cost"] = float(vals[0])
            elif key == "subset":
                out["subset"] = tuple(int(v) for v in vals)
            elif key == "step":
                out["steps"].append((int(vals[0]), float(vals[1])))
            else:
                raise FormatError(f"unknown solution line {line!r}")
    except (ValueError, IndexError) as exc:
        raise FormatError(str(exc)) from None
    missing = {"c", "k", "cost", "subset"} - out.keys()
    if missing:
        raise FormatError(f"solution file lacks {sorted(missing)}")
    return out


# -- ball reports ----------------------------------------------------------------

def format_ball_report(report) -> str:
    return "".join(
        f"point {i} in_count {a} cover_count {b}\n"
        for i, (a, b) in enumerate(zip(report.contains_counts, report.covered_counts))
    )


# -- graphs ------------------------------------------------------------------------

def format_graph(g: Graph) -> str:
    edges = g.sorted_edges()
    out = [f"dispersion-graph v1 {g.n_vertices} {len(edges)}"]
    out += [f"{u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    """Read the native 0-based format or DIMACS ``p edge`` / ``e u v`` (1-based)."""
    stripped = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if any(ln.startswith("p ") for ln in stripped):
        return _parse_dimacs(stripped)
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty graph file")
    head = lines[0].split()
    if len(head) != 4 or head[:2] != ["dispersion-graph", "v1"]:
        raise FormatError(f"bad graph header: {lines[0]!r}")
    try:
        n, m = int(head[2]), int(head[3])
        edges = [tuple(int(t) for t in line.split()) for line in lines[1:]]
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if len(edges) != m or any(len(e) != 2 for e in edges):
        raise FormatError(f"header promises {m} edges of two vertices each")
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def _parse_dimacs(lines) -> Graph:
    n = None
    edges = []
    try:
        for line in lines:
            tok = line.split()
            if tok[0] == "c":
                continue
            if tok[0] == "p":
                n = int(tok[2])
            elif tok[0] == "e":
                edges.append((int(tok[1]) - 1, int(tok[2]) - 1))
            else:
                raise FormatError(f"unexpected DIMACS line {line!r}")
        if n is None:
            raise FormatError("DIMACS file lacks a problem line")
        # DIMACS files often list both directions of an edge
        return Graph.from_edges(n, edges, allow_duplicates=True)
    except (ValueError, IndexError, GraphError) as exc:
        raise FormatError(str(exc)) from None


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(format_graph(g))
