"""Total colorings, strict verification, color matrices, and vertex partitions.

Color ids are 1-based positive integers; 0 never appears as a color and is
reserved for "blank" when a matrix is rendered.  Edge keys are normalized
(u, v) tuples with u < v.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .graphs import Graph


def ekey(u: int, v: int) -> tuple:
    """Normalized unordered edge key."""
    return (u, v) if u < v else (v, u)


class ColoringError(ValueError):
    """Raised for malformed coloring inputs or file formats."""


@dataclass
class TotalColoring:
    """Vertex and edge color assignment (possibly partial, e.g. one part of a
    split construction)."""

    n: int
    vertex_color: Dict[int, int] = field(default_factory=dict)
    edge_color: Dict[tuple, int] = field(default_factory=dict)

    def colors_used(self) -> int:
        return len(set(self.vertex_color.values()) | set(self.edge_color.values()))

    def set_edge(self, u: int, v: int, c: int) -> None:
        self.edge_color[ekey(u, v)] = c

    def merged_with(self, other: "TotalColoring") -> "TotalColoring":
        """Union of two fragments; overlapping assignments must agree."""
        if self.n != other.n:
            raise ColoringError("fragment sizes differ")
        out = TotalColoring(self.n, dict(self.vertex_color), dict(self.edge_color))
        for v, c in other.vertex_color.items():
            if out.vertex_color.get(v, c) != c:
                raise ColoringError("vertex %d colored twice inconsistently" % v)
            out.vertex_color[v] = c
        for e, c in other.edge_color.items():
            if out.edge_color.get(e, c) != c:
                raise ColoringError("edge %r colored twice inconsistently" % (e,))
            out.edge_color[e] = c
        return out


def color_count(c: TotalColoring) -> int:
    """Number of distinct color ids used (usage, not the minimum)."""
    return c.colors_used()


@dataclass
class VerificationReport:
    """Exhaustive conflict and coverage diagnostics for a total coloring.

    Conflicts are tagged tuples, sorted lexicographically:
      ("vertex-vertex", u, v)             adjacent vertices share a color
      ("edge-edge", e1, e2, shared)       adjacent edges share a color
      ("vertex-edge", v, e)               an edge matches an incident vertex
    Coverage errors (missing / extra assignments) are reported separately.
    """

    conflicts: list
    coverage_errors: list
    colors_used: int

    @property
    def ok(self) -> bool:
        return not self.conflicts and not self.coverage_errors


def verify_total(G: Graph, c: TotalColoring) -> VerificationReport:
    """Strict, complete verification of a total coloring against G."""
    coverage = []
    if c.n != G.n:
        coverage.append(("size-mismatch", c.n, G.n))
    for v in range(G.n):
        if v not in c.vertex_color:
            coverage.append(("missing-vertex", v))
    for v in c.vertex_color:
        if not (0 <= v < G.n):
            coverage.append(("extra-vertex", v))
    edges = set(map(tuple, G.edges()))
    for e in edges:
        if e not in c.edge_color:
            coverage.append(("missing-edge", e))
    for e in c.edge_color:
        if tuple(e) not in edges:
            coverage.append(("non-edge", tuple(e)))
    coverage.sort(key=repr)

    conflicts = []
    for (u, v) in sorted(edges):
        cu, cv = c.vertex_color.get(u), c.vertex_color.get(v)
        if cu is not None and cu == cv:
            conflicts.append(("vertex-vertex", u, v))
        ce = c.edge_color.get((u, v))
        if ce is not None:
            if ce == cu:
                conflicts.append(("vertex-edge", u, (u, v)))
            if ce == cv:
                conflicts.append(("vertex-edge", v, (u, v)))
    # adjacent edge pairs, scanned per shared vertex
    for w in range(G.n):
        nbrs = G.neighbors(w)
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                e1 = ekey(w, nbrs[i])
                e2 = ekey(w, nbrs[j])
                c1, c2 = c.edge_color.get(e1), c.edge_color.get(e2)
                if c1 is not None and c1 == c2:
                    a, b = sorted((e1, e2))
                    conflicts.append(("edge-edge", a, b, w))
    conflicts = sorted(set(conflicts), key=repr)
    return VerificationReport(conflicts, coverage, c.colors_used())


# ---------------------------------------------------------------------------
# Vertex partitions


@dataclass
class VertexPartition:
    """Ordered list of disjoint vertex classes covering 0..n-1 (empty classes
    permitted and recorded)."""

    n: int
    classes: list

    def validate(self) -> None:
        seen = set()
        for cls in self.classes:
            for v in cls:
                if v in seen:
                    raise ColoringError("vertex %d in two classes" % v)
                seen.add(v)
        if seen != set(range(self.n)):
            raise ColoringError("classes do not cover the vertex set")


def residue_partition(n: int, q: int) -> VertexPartition:
    """q classes of size n/q: class i = {v : v = i mod q}."""
    if q <= 0 or n % q != 0:
        raise ColoringError("%d does not divide %d" % (q, n))
    classes = [tuple(range(i, n, q)) for i in range(q)]
    return VertexPartition(n, classes)


def check_partition(G: Graph, p: VertexPartition, mode: str = "independent",
                    q: Optional[int] = None) -> bool:
    """Check a vertex partition.

    mode="independent": every class is an independent set.
    mode="conformable": additionally requires a regular graph, exactly q
    classes, and every class size with the same parity as n (empty = 0).
    """
    p.validate()
    if p.n != G.n:
        raise ColoringError("partition size mismatch")
    independent = all(
        not G.has_edge(u, v)
        for cls in p.classes
        for i, u in enumerate(cls)
        for v in cls[i + 1:]
    )
    if mode == "independent":
        return independent
    if mode == "conformable":
        if q is None:
            raise ColoringError("conformable mode needs a class count q")
        if G.regular_degree is None:
            raise ColoringError("conformable check requires a regular graph")
        if len(p.classes) != q:
            return False
        parity = G.n % 2
        return independent and all(len(cls) % 2 == parity for cls in p.classes)
    raise ColoringError("unknown mode %r" % mode)


# ---------------------------------------------------------------------------
# Total color matrix


@dataclass
class TotalColorMatrix:
    """n x n grid; diagonal = vertex colors, cell (i,j) = color of edge {i,j},
    None on blanks."""

    n: int
    grid: list

    def cell(self, i: int, j: int):
        return self.grid[i][j]


def render_matrix(G: Graph, c: TotalColoring, partial: bool = False) -> TotalColorMatrix:
    """Render a coloring as the symmetric color matrix.

    With partial=False the coloring must exactly cover G (coverage errors
    raise); partial=True renders whatever is present, leaving blanks.
    """
    if not partial:
        report = verify_total(G, c)
        if report.coverage_errors:
            raise ColoringError("coverage errors: %r" % report.coverage_errors[:5])
    grid = [[None] * G.n for _ in range(G.n)]
    for v, col in c.vertex_color.items():
        grid[v][v] = col
    for (u, v), col in c.edge_color.items():
        grid[u][v] = col
        grid[v][u] = col
    return TotalColorMatrix(G.n, grid)


def parse_matrix(grid) -> TotalColoring:
    """Inverse of render_matrix: read vertex colors off the diagonal and edge
    colors off the filled off-diagonal cells.  The grid must be symmetric."""
    n = len(grid)
    c = TotalColoring(n)
    for i in range(n):
        if len(grid[i]) != n:
            raise ColoringError("grid is not square")
        if grid[i][i] is not None:
            c.vertex_color[i] = int(grid[i][i])
    for i in range(n):
        for j in range(i + 1, n):
            if grid[i][j] != grid[j][i]:
                raise ColoringError("grid asymmetric at (%d,%d)" % (i, j))
            if grid[i][j] is not None:
                c.edge_color[(i, j)] = int(grid[i][j])
    return c


# ---------------------------------------------------------------------------
# File formats


def write_coloring(c: TotalColoring, path) -> None:
    """Line format: `t <n> <color-count>`, then `v <vertex> <color>` and
    `e <u> <v> <color>` lines, 0-indexed, deterministic order."""
    lines = ["t %d %d" % (c.n, c.colors_used())]
    for v in sorted(c.vertex_color):
        lines.append("v %d %d" % (v, c.vertex_color[v]))
    for (u, v) in sorted(c.edge_color):
        lines.append("e %d %d %d" % (u, v, c.edge_color[(u, v)]))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_coloring(path) -> TotalColoring:
    c = None
    with open(path) as fh:
        for raw in fh:
            tok = raw.split()
            if not tok:
                continue
            if tok[0] == "t":
                c = TotalColoring(int(tok[1]))
            elif tok[0] == "v":
                if c is None:
                    raise ColoringError("vertex line before header")
                c.vertex_color[int(tok[1])] = int(tok[2])
            elif tok[0] == "e":
                if c is None:
                    raise ColoringError("edge line before header")
                c.set_edge(int(tok[1]), int(tok[2]), int(tok[3]))
            else:
                raise ColoringError("unrecognized line: %r" % raw.strip())
    if c is None:
        raise ColoringError("missing header line")
    return c


def matrix_to_csv(matrix: TotalColorMatrix, path) -> None:
    """CSV with a header row/column of vertex labels; empty cell = blank,
    matching the printed table layout."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([""] + [str(j) for j in range(matrix.n)])
        for i in range(matrix.n):
            row = [str(i)] + [
                "" if matrix.grid[i][j] is None else str(matrix.grid[i][j])
                for j in range(matrix.n)
            ]
            writer.writerow(row)


def matrix_from_csv(path) -> TotalColorMatrix:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise ColoringError("empty CSV")
    n = len(rows[0]) - 1
    if len(rows) != n + 1:
        raise ColoringError("CSV not square")
    grid = []
    for raw in rows[1:]:
        grid.append([None if cell == "" else int(cell) for cell in raw[1:]])
    return TotalColorMatrix(n, grid)


def adjacency_matrix_csv(G: Graph, path) -> None:
    """Adjacency table in the same layout: 0 on the diagonal, 1 on edges,
    blank elsewhere."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([""] + [str(j) for j in range(G.n)])
        for i in range(G.n):
            row = [str(i)]
            for j in range(G.n):
                if i == j:
                    row.append("0")
                elif G.has_edge(i, j):
                    row.append("1")
                else:
                    row.append("")
            writer.writerow(row)
