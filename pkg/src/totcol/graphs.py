"""Circulant, unitary Cayley, and table-defined Cayley graphs.

Vertices are always labeled 0..n-1.  Adjacency is stored densely, one
bitmask row per vertex, so membership tests are O(1) and the verifier /
exact solvers can hammer them freely.  All constructors are pure; Graph
objects are immutable after construction.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graph inputs."""


def totient(n: int) -> int:
    """Euler's totient of n (n >= 1)."""
    if n < 1:
        raise ValueError("totient requires n >= 1")
    result = n
    temp = n
    p = 2
    while p * p <= temp:
        if temp % p == 0:
            while temp % p == 0:
                temp //= p
            result -= result // p
        p += 1
    if temp > 1:
        result -= result // temp
    return result


def least_prime_factor(m: int) -> int:
    """Smallest prime dividing m (m >= 2)."""
    if m < 2:
        raise ValueError("least_prime_factor requires m >= 2")
    d = 2
    while d * d <= m:
        if m % d == 0:
            return d
        d += 1
    return m


@dataclass(frozen=True)
class CirculantSpec:
    """Vertex count n plus a symmetric, identity-free connection set in 1..n-1."""

    n: int
    connection: frozenset

    def __init__(self, n: int, connection) -> None:
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "connection", frozenset(int(s) for s in connection))
        if self.n < 1:
            raise GraphError("vertex count must be >= 1")
        for s in self.connection:
            if not (1 <= s <= self.n - 1):
                raise GraphError("connection element %d outside 1..n-1" % s)
            if (self.n - s) % self.n not in self.connection:
                raise GraphError(
                    "connection set not symmetric: %d present but %d missing"
                    % (s, self.n - s)
                )

    @property
    def degree(self) -> int:
        return len(self.connection)

    def half_set(self) -> list:
        """Representatives s <= n/2, one per inverse pair (n/2 itself included once)."""
        return sorted(s for s in self.connection if s <= self.n // 2)


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its multiplication table of element indices."""

    n: int
    product: tuple
    identity: int

    def __init__(self, n: int, product, identity: int) -> None:
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "product", tuple(tuple(row) for row in product))
        object.__setattr__(self, "identity", int(identity))
        self._validate()

    def _validate(self) -> None:
        n, t, e = self.n, self.product, self.identity
        if len(t) != n or any(len(row) != n for row in t):
            raise GraphError("product table must be n x n")
        for row in t:
            for x in row:
                if not (0 <= x < n):
                    raise GraphError("table entry %r not an element index" % (x,))
        if not (0 <= e < n):
            raise GraphError("identity index out of range")
        for g in range(n):
            if t[e][g] != g or t[g][e] != g:
                raise GraphError("identity law fails at element %d" % g)
        for g in range(n):
            if e not in t[g]:
                raise GraphError("element %d has no inverse" % g)
        if n <= 64:
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        if t[t[a][b]][c] != t[a][t[b][c]]:
                            raise GraphError(
                                "associativity fails at (%d,%d,%d)" % (a, b, c)
                            )
        else:
            warnings.warn(
                "group table too large (n=%d > 64); associativity not checked" % n
            )

    def inverse(self, g: int) -> int:
        return self.product[g].index(self.identity)


def cyclic_group(n: int) -> GroupTable:
    """The cyclic group Z_n as an explicit table."""
    return GroupTable(n, [[(i + j) % n for j in range(n)] for i in range(n)], 0)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with dense bitmask adjacency rows."""

    n: int
    rows: tuple
    circulant: Optional[CirculantSpec] = None
    cayley: Optional[tuple] = None  # (GroupTable, frozenset of generators)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, u: int) -> list:
        row = self.rows[u]
        return [v for v in range(self.n) if (row >> v) & 1]

    def degree(self, u: int) -> int:
        return bin(self.rows[u]).count("1")

    def edges(self) -> list:
        """All edges as sorted (u, v) pairs with u < v."""
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    @property
    def edge_count(self) -> int:
        return sum(self.degree(u) for u in range(self.n)) // 2

    @property
    def max_degree(self) -> int:
        return max((self.degree(u) for u in range(self.n)), default=0)

    @property
    def regular_degree(self) -> Optional[int]:
        degs = {self.degree(u) for u in range(self.n)}
        return degs.pop() if len(degs) == 1 else None


def _graph_from_edges(n: int, edges, circulant=None, cayley=None) -> Graph:
    rows = [0] * n
    for (u, v) in edges:
        if u == v:
            raise GraphError("self-loop at vertex %d" % u)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), circulant, cayley)


def build_circulant(spec: CirculantSpec) -> Graph:
    """Circulant graph: u ~ v iff (v - u) mod n lies in the connection set."""
    edges = []
    for u in range(spec.n):
        for s in spec.connection:
            v = (u + s) % spec.n
            if u < v:
                edges.append((u, v))
    return _graph_from_edges(spec.n, edges, circulant=spec)


def build_unitary(n: int) -> Graph:
    """Unitary Cayley graph U_n: connection set = units mod n."""
    if n < 2:
        raise GraphError("build_unitary requires n >= 2")
    units = frozenset(i for i in range(1, n) if math.gcd(i, n) == 1)
    return build_circulant(CirculantSpec(n, units))


def build_cayley(table: GroupTable, S) -> Graph:
    """Cayley graph of a finite group: g ~ g*s for s in the symmetric set S."""
    S = frozenset(int(s) for s in S)
    if table.identity in S:
        raise GraphError("generating set contains the identity")
    for s in S:
        if table.inverse(s) not in S:
            raise GraphError("generating set not symmetric: inverse of %d missing" % s)
    edges = set()
    for g in range(table.n):
        for s in S:
            h = table.product[g][s]
            if g != h:
                edges.add((min(g, h), max(g, h)))
    return _graph_from_edges(table.n, sorted(edges), cayley=(table, S))


def complement(G: Graph) -> Graph:
    """Complement graph; circulant / Cayley provenance is carried along."""
    full = (1 << G.n) - 1
    rows = tuple((full & ~G.rows[u]) & ~(1 << u) for u in range(G.n))
    circ = None
    if G.circulant is not None:
        circ = CirculantSpec(
            G.n, frozenset(range(1, G.n)) - G.circulant.connection
        )
    cay = None
    if G.cayley is not None:
        table, S = G.cayley
        comp_S = frozenset(range(table.n)) - S - {table.identity}
        cay = (table, comp_S)
    return Graph(G.n, rows, circ, cay)


def connected(G: Graph) -> bool:
    """True iff G has a single connected component (K_1 counts as connected)."""
    if G.n == 0:
        return True
    seen = 1
    frontier = [0]
    while frontier:
        u = frontier.pop()
        row = G.rows[u] & ~seen
        v = 0
        while row:
            if row & 1:
                seen |= 1 << v
                frontier.append(v)
            row >>= 1
            v += 1
    return seen == (1 << G.n) - 1


def bipartition(G: Graph):
    """A bipartition (A, B) with 0 in A when G is bipartite, else None."""
    side = [-1] * G.n
    for start in range(G.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in G.neighbors(u):
                if side[v] == -1:
                    side[v] = 1 - side[u]
                    queue.append(v)
                elif side[v] == side[u]:
                    return None
    part_a = tuple(v for v in range(G.n) if side[v] == 0)
    part_b = tuple(v for v in range(G.n) if side[v] == 1)
    return part_a, part_b


@dataclass(frozen=True)
class TwoFactor:
    """One factor of a circulant 2-factor decomposition.

    generators is the inverse pair (s, n-s), or the singleton (n/2,) whose
    factor degenerates to a perfect matching (cycles of length 2).
    """

    generators: tuple
    cycles: tuple


@dataclass(frozen=True)
class TwoFactorDecomposition:
    n: int
    factors: tuple


def two_factors(spec: CirculantSpec) -> TwoFactorDecomposition:
    """Decompose a circulant into 2-factors, one per generator pair {s, n-s}.

    The factor for s has gcd(n, s) cycles of length n/gcd(n, s); the
    singleton generator n/2 yields a perfect matching.
    """
    n = spec.n
    factors = []
    for s in spec.half_set():
        if 2 * s == n:
            cycles = tuple((i, i + s) for i in range(s))
            factors.append(TwoFactor((s,), cycles))
        else:
            g = math.gcd(n, s)
            cycles = tuple(
                tuple((c + k * s) % n for k in range(n // g)) for c in range(g)
            )
            factors.append(TwoFactor((s, n - s), cycles))
    return TwoFactorDecomposition(n, tuple(factors))


def factor_edges(factor: TwoFactor):
    """Edge list (u < v pairs) of a single 2-factor."""
    edges = set()
    for cyc in factor.cycles:
        k = len(cyc)
        if k == 2:
            u, v = cyc
            edges.add((min(u, v), max(u, v)))
        else:
            for i in range(k):
                u, v = cyc[i], cyc[(i + 1) % k]
                edges.add((min(u, v), max(u, v)))
    return sorted(edges)


def subgraph_of_edges(n: int, edges) -> Graph:
    """Spanning subgraph on 0..n-1 containing exactly the given edges."""
    return _graph_from_edges(n, edges)


# ---------------------------------------------------------------------------
# DIMACS-style graph files


def write_dimacs(G: Graph, path) -> None:
    """Write `p edge n m` / `e u v` lines, 1-indexed; circulant provenance
    goes into a `c circulant n s1 s2 ...` comment."""
    lines = []
    if G.circulant is not None:
        conn = " ".join(str(s) for s in sorted(G.circulant.connection))
        lines.append("c circulant %d %s" % (G.circulant.n, conn))
    edges = G.edges()
    lines.append("p edge %d %d" % (G.n, len(edges)))
    for (u, v) in edges:
        lines.append("e %d %d" % (u + 1, v + 1))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_dimacs(path) -> Graph:
    n = None
    edges = []
    circ = None
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            tok = line.split()
            if tok[0] == "c":
                if len(tok) >= 3 and tok[1] == "circulant":
                    circ = CirculantSpec(int(tok[2]), [int(x) for x in tok[3:]])
                continue
            if tok[0] == "p":
                if len(tok) != 4 or tok[1] != "edge":
                    raise GraphError("malformed problem line: %r" % line)
                n = int(tok[2])
                continue
            if tok[0] == "e":
                if n is None:
                    raise GraphError("edge line before problem line")
                u, v = int(tok[1]) - 1, int(tok[2]) - 1
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphError("edge endpoint out of range: %r" % line)
                edges.append((u, v))
                continue
            raise GraphError("unrecognized line: %r" % line)
    if n is None:
        raise GraphError("missing problem line")
    G = _graph_from_edges(n, edges, circulant=circ)
    if circ is not None:
        expected = build_circulant(circ)
        if expected.rows != G.rows:
            raise GraphError("circulant comment inconsistent with edge list")
    return G
