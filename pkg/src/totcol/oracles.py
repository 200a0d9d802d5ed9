"""Desk-scale exact solvers certifying optimality and impossibility claims.

The total-coloring solver works on the "total graph" view: colorable items
are the vertices and edges, conflicts are adjacency / shared endpoints /
incidence.  "Inconclusive" is a first-class outcome carrying the exhausted
budget; the solvers never silently overclaim.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .graphs import Graph, complement
from .coloring import TotalColoring, ekey, verify_total


class OracleError(ValueError):
    pass


@dataclass
class SearchBudget:
    """Limits for the exact searches; exhaustion yields an explicit
    inconclusive outcome."""

    max_colors: int = 64
    node_limit: int = 50_000_000
    time_limit_secs: float = 600.0

    def __post_init__(self):
        if self.max_colors <= 0 or self.node_limit <= 0 or self.time_limit_secs <= 0:
            raise OracleError("budget limits must be positive")


class _Budget:
    def __init__(self, budget: SearchBudget):
        self.node_limit = budget.node_limit
        self.deadline = time.monotonic() + budget.time_limit_secs
        self.nodes = 0

    def tick(self) -> bool:
        self.nodes += 1
        if self.nodes > self.node_limit:
            return False
        if self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            return False
        return True


def _solve_list_coloring(adj: List[List[int]], k: int, precolor: Dict[int, int],
                         budget: _Budget):
    """Feasibility of a proper k-coloring of a conflict graph.

    adj: neighbor index lists.  Returns ("sat", colors), ("unsat", None), or
    ("budget", None).  Deterministic: MRV with index tie-break, ascending
    colors, and the classic cap that a fresh color may only be the smallest
    unused one.
    """
    n = len(adj)
    full = (1 << (k + 1)) - 2  # bits 1..k
    domain = [full] * n
    color = [0] * n
    for item, c in precolor.items():
        if c > k:
            return "unsat", None
        domain[item] = 1 << c

    def assign(item: int, c: int, trail: list) -> bool:
        color[item] = c
        bit = 1 << c
        for nb in adj[item]:
            if color[nb] == 0 and domain[nb] & bit:
                domain[nb] &= ~bit
                trail.append(nb)
                if domain[nb] == 0:
                    return False
        return True

    def undo(item: int, c: int, trail: list) -> None:
        bit = 1 << c
        for nb in trail:
            domain[nb] |= bit
        color[item] = 0

    # seed: apply precolors first (propagation included)
    pre_trail: list = []
    maxused = 0
    for item, c in sorted(precolor.items()):
        maxused = max(maxused, c)
        if color[item] == 0:
            if not assign(item, c, pre_trail):
                return "unsat", None

    def rec(maxused: int):
        if not budget.tick():
            raise _OutOfBudget()
        best, best_count = -1, k + 2
        for i in range(n):
            if color[i] == 0:
                cnt = bin(domain[i]).count("1")
                if cnt < best_count:
                    best, best_count = i, cnt
                    if cnt <= 1:
                        break
        if best == -1:
            return True
        cap = min(k, maxused + 1)
        dom = domain[best]
        for c in range(1, cap + 1):
            if not (dom >> c) & 1:
                continue
            trail: list = []
            if assign(best, c, trail):
                if rec(max(maxused, c)):
                    return True
            undo(best, c, trail)
        return False

    try:
        if rec(maxused):
            return "sat", list(color)
        return "unsat", None
    except _OutOfBudget:
        return "budget", None


class _OutOfBudget(Exception):
    pass


# ---------------------------------------------------------------------------
# Total graph view


def total_items(G: Graph):
    """Items of the total graph (vertices then edges) and their conflict
    adjacency lists."""
    items = [("v", v) for v in range(G.n)] + [("e", e) for e in G.edges()]
    index = {it: i for i, it in enumerate(items)}
    adj: List[set] = [set() for _ in items]

    def link(a, b):
        ia, ib = index[a], index[b]
        adj[ia].add(ib)
        adj[ib].add(ia)

    for (u, v) in G.edges():
        link(("v", u), ("v", v))
        link(("v", u), ("e", (u, v)))
        link(("v", v), ("e", (u, v)))
    for w in range(G.n):
        nbrs = G.neighbors(w)
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                link(("e", ekey(w, nbrs[i])), ("e", ekey(w, nbrs[j])))
    return items, [sorted(s) for s in adj], index


def _star_clique(G: Graph, index) -> Dict[int, int]:
    """Precolor the star of a maximum-degree vertex (a clique of size
    Delta+1 in the total graph) with colors 1..Delta+1."""
    if G.n == 0:
        return {}
    v = max(range(G.n), key=lambda u: (G.degree(u), -u))
    pre = {index[("v", v)]: 1}
    c = 2
    for u in G.neighbors(v):
        pre[index[("e", ekey(v, u))]] = c
        c += 1
    return pre


@dataclass
class TotalChromaticResult:
    status: str  # "exact" or "inconclusive"
    value: Optional[int]
    coloring: Optional[TotalColoring]
    lower_bound: int
    nodes: int


def exact_total_chromatic(G: Graph, budget: Optional[SearchBudget] = None) -> TotalChromaticResult:
    """Least c admitting a proper total coloring, by exhaustive backtracking
    per candidate c starting at the clique lower bound Delta+1."""
    budget = budget or SearchBudget()
    items, adj, index = total_items(G)
    delta = G.max_degree
    lower = delta + 1
    tracker = _Budget(budget)
    total_nodes = 0
    for c in range(lower, budget.max_colors + 1):
        pre = _star_clique(G, index)
        status, colors = _solve_list_coloring(adj, c, pre, tracker)
        total_nodes = tracker.nodes
        if status == "sat":
            tc = TotalColoring(G.n)
            for i, it in enumerate(items):
                if it[0] == "v":
                    tc.vertex_color[it[1]] = colors[i]
                else:
                    tc.edge_color[it[1]] = colors[i]
            report = verify_total(G, tc)
            if not report.ok:
                raise AssertionError("oracle certificate failed verification")
            return TotalChromaticResult("exact", c, tc, lower, total_nodes)
        if status == "budget":
            return TotalChromaticResult("inconclusive", None, None, lower, total_nodes)
    return TotalChromaticResult("inconclusive", None, None, lower, total_nodes)


def exact_chromatic(G: Graph, budget: Optional[SearchBudget] = None):
    """Exact chromatic number with a proper-coloring certificate."""
    budget = budget or SearchBudget()
    adj = [G.neighbors(v) for v in range(G.n)]
    # greedy clique from a max-degree vertex, for the lower bound + precolor
    clique: list = []
    if G.n:
        v0 = max(range(G.n), key=lambda u: (G.degree(u), -u))
        clique = [v0]
        for u in range(G.n):
            if u != v0 and all(G.has_edge(u, w) for w in clique):
                clique.append(u)
    tracker = _Budget(budget)
    for k in range(max(1, len(clique)), budget.max_colors + 1):
        pre = {v: i + 1 for i, v in enumerate(clique)}
        status, colors = _solve_list_coloring(adj, k, pre, tracker)
        if status == "sat":
            assignment = {v: colors[v] for v in range(G.n)}
            for (u, v) in G.edges():
                if assignment[u] == assignment[v]:
                    raise AssertionError("chromatic certificate invalid")
            return k, assignment
        if status == "budget":
            raise OracleError("chromatic search budget exhausted")
    raise OracleError("no coloring within max_colors")


# ---------------------------------------------------------------------------
# Cliques


@dataclass
class CliqueStats:
    cliques: list  # all maximal cliques, sorted
    omega: int
    maximal_count: int
    maximum_count: int


def maximal_cliques(G: Graph) -> CliqueStats:
    """All maximal cliques via pivoting enumeration, with clique-number and
    count statistics."""
    out: list = []
    nbr = [set(G.neighbors(v)) for v in range(G.n)]

    def expand(clique, candidates, excluded):
        if not candidates and not excluded:
            out.append(tuple(sorted(clique)))
            return
        pivot_pool = candidates | excluded
        pivot = max(pivot_pool, key=lambda u: (len(candidates & nbr[u]), -u))
        for v in sorted(candidates - nbr[pivot]):
            expand(clique + [v], candidates & nbr[v], excluded & nbr[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    if G.n:
        expand([], set(range(G.n)), set())
    out.sort()
    omega = max((len(c) for c in out), default=0)
    maximum_count = sum(1 for c in out if len(c) == omega)
    return CliqueStats(out, omega, len(out), maximum_count)


# ---------------------------------------------------------------------------
# Perfectness


def _has_odd_hole(G: Graph) -> bool:
    """Induced odd cycle of length >= 5, by chordless-path extension."""
    nbr = [set(G.neighbors(v)) for v in range(G.n)]
    for s in range(G.n):
        higher = [v for v in nbr[s] if v > s]
        for first in higher:
            # path = [s, first, ...]; internal vertices must avoid nbr[s]
            stack = [([s, first], {s, first})]
            while stack:
                path, members = stack.pop()
                last = path[-1]
                for u in sorted(nbr[last]):
                    if u <= s or u in members:
                        continue
                    # chordless: u may touch only the path's last vertex (and s at closure)
                    if any(w in nbr[u] for w in path[1:-1]):
                        continue
                    if u in nbr[s]:
                        cycle_len = len(path) + 1
                        if cycle_len >= 5 and cycle_len % 2 == 1 and u > first:
                            return True
                        continue  # chord to s: cannot be extended legally
                    stack.append((path + [u], members | {u}))
    return False


def is_perfect(G: Graph, size_limit: int = 20) -> bool:
    """No induced odd hole in G or its complement (exhaustive; desk scale)."""
    if G.n > size_limit:
        raise OracleError("is_perfect limited to n <= %d" % size_limit)
    if _has_odd_hole(G):
        return False
    return not _has_odd_hole(complement(G))


# ---------------------------------------------------------------------------
# Conformability


def conformable_exists(G: Graph, q: int, budget: Optional[SearchBudget] = None):
    """Does V partition into exactly q independent classes whose sizes all
    share n's parity (empty classes count as size 0)?

    Returns (bool, partition-or-None).  Exhaustive backtracking with parity
    pruning and first-empty-class symmetry breaking.
    """
    if G.regular_degree is None:
        raise OracleError("conformable check requires a regular graph")
    n = G.n
    parity = n % 2
    classes: List[list] = [[] for _ in range(q)]
    nbr = [set(G.neighbors(v)) for v in range(G.n)]

    def deficits() -> int:
        return sum(1 for cls in classes if len(cls) % 2 != parity)

    def rec(v: int) -> bool:
        if v == n:
            return deficits() == 0
        remaining = n - v
        d = deficits()
        if remaining < d or (remaining - d) % 2 != 0:
            return False
        opened_empty = False
        for ci in range(q):
            cls = classes[ci]
            if not cls:
                if opened_empty:
                    continue  # empty classes are interchangeable
                opened_empty = True
            if any(u in nbr[v] for u in cls):
                continue
            cls.append(v)
            if rec(v + 1):
                return True
            cls.pop()
        return False

    if rec(0):
        result = [tuple(cls) for cls in classes]
        return True, result
    return False, None


# ---------------------------------------------------------------------------
# Classification


@dataclass
class Classification:
    kind: str  # "type1" | "type2" | "inconclusive"
    delta: int
    certificate: Optional[TotalColoring]
    value: Optional[int]
    nodes: int
    detail: str


def classify_type(G: Graph, budget: Optional[SearchBudget] = None) -> Classification:
    """Type I (Delta+1 certificate), type II (exhausted search at Delta+1
    plus a Delta+2 certificate), or inconclusive with the spent budget."""
    budget = budget or SearchBudget()
    delta = G.max_degree
    capped = SearchBudget(
        max_colors=min(budget.max_colors, delta + 2),
        node_limit=budget.node_limit,
        time_limit_secs=budget.time_limit_secs,
    )
    res = exact_total_chromatic(G, capped)
    if res.status == "exact" and res.value == delta + 1:
        return Classification("type1", delta, res.coloring, res.value, res.nodes,
                              "exact search found a Delta+1 total coloring")
    if res.status == "exact" and res.value == delta + 2:
        return Classification("type2", delta, res.coloring, res.value, res.nodes,
                              "Delta+1 exhausted without a coloring; Delta+2 certificate found")
    return Classification("inconclusive", delta, None, None, res.nodes,
                          "search budget exhausted")
