"""Constructive total colorings of circulant and Cayley graphs.

The common engine is the diagonal-filling scheme: vertices take the repeating
pattern 1..q along the labels, and each generator's 2-factor takes a cyclic
edge pattern offset by a per-generator start value.  Start values come either
from the literal column rules (start_entries) or from an exhaustive starter
search that partitions the nonzero residues mod q into pairs with prescribed
differences.  Every pipeline ends in verify_total and fails loudly.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .graphs import (
    CirculantSpec,
    Graph,
    build_circulant,
    build_unitary,
    complement,
    connected,
    factor_edges,
    least_prime_factor,
    subgraph_of_edges,
    totient,
    two_factors,
)
from .coloring import TotalColoring, ekey, verify_total


class ConstructionError(ValueError):
    """A construction's preconditions failed or no admissible choice exists."""


class VerificationFailure(RuntimeError):
    """A construction produced a coloring the strict verifier rejects."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


def _checked(G: Graph, c: TotalColoring, what: str) -> TotalColoring:
    report = verify_total(G, c)
    if not report.ok:
        raise VerificationFailure(
            "%s produced an invalid coloring: %d conflicts, %d coverage errors"
            % (what, len(report.conflicts), len(report.coverage_errors)),
            report,
        )
    return c


def _rho(x: int, q: int) -> int:
    """Map a mod-q value into 1..q, with 0 standing for q."""
    r = x % q
    return r if r else q


# ---------------------------------------------------------------------------
# Start entries and starter pairings


@dataclass(frozen=True)
class StartEntryTable:
    """First-row start values a_j per used column j, plus the forced wrap
    values at column n+2-j.  Modulus q is odd; start(j) - wrap(j) = j-1 (mod q).
    """

    q: int
    columns: tuple
    start: dict
    wrap: dict

    def values_with_diagonal(self) -> list:
        out = [1]
        for j in self.columns:
            if j == 1:
                continue
            out.append(self.start[j])
            out.append(self.wrap[j])
        return out


def start_entries(q: int, J, n: int) -> StartEntryTable:
    """Literal column rules for the first row of the color matrix.

    Column 1 is the diagonal (value 1); odd columns j > 1 start at
    2 + (j-3)/2, even columns at (q+1)/2 + (j-2)/2 + 1, all mod q with 0
    read as q.  Wrap values are the forced entries at column n+2-j.
    """
    if q < 3 or q % 2 == 0:
        raise ConstructionError("modulus q must be odd and >= 3")
    columns = tuple(sorted(int(j) for j in J))
    for j in columns:
        if not (1 <= j <= n // 2 + 1):
            raise ConstructionError("column %d outside 1..floor(n/2)+1" % j)
    start = {}
    wrap = {}
    for j in columns:
        if j == 1:
            start[j] = 1
            wrap[j] = 1
        elif j % 2 == 1:
            start[j] = _rho(2 + (j - 3) // 2, q)
            wrap[j] = _rho(q - (j - 3) // 2, q)
        else:
            start[j] = _rho((q + 1) // 2 + (j - 2) // 2 + 1, q)
            wrap[j] = _rho((q + 1) // 2 - (j - 2) // 2, q)
    return StartEntryTable(q, columns, start, wrap)


@dataclass(frozen=True)
class StarterPairing:
    """Disjoint pairs of nonzero residues mod q, one per requested difference.

    entries[i] = (diff, (x, y)) with x - y = diff (mod q), aligned with the
    requested difference list.  Stored as a list rather than a map keyed by
    difference class because difference classes may repeat.
    """

    q: int
    entries: tuple

    def validate(self) -> None:
        seen = set()
        for diff, (x, y) in self.entries:
            if x % self.q == 0 or y % self.q == 0:
                raise ConstructionError("pair member is zero mod q")
            if (x - y) % self.q != diff % self.q:
                raise ConstructionError("pair (%d,%d) has wrong difference" % (x, y))
            for m in (x, y):
                if m in seen:
                    raise ConstructionError("residue %d used twice" % m)
                seen.add(m)


def starter_search(q: int, diffs) -> Optional[StarterPairing]:
    """Exhaustive backtracking for a starter pairing.

    diffs is a sequence of required differences (taken mod q; each request d
    asks for a pair {x, x-d} of nonzero residues, all pairs disjoint).  The
    lexicographically least solution in x-order is returned; None if none
    exists.
    """
    if q < 3 or q % 2 == 0:
        raise ConstructionError("modulus q must be odd and >= 3")
    diffs = [d % q for d in diffs]
    if any(d == 0 for d in diffs):
        raise ConstructionError("difference 0 mod q is not pairable")
    if len(diffs) > (q - 1) // 2:
        raise ConstructionError("too many difference requests for modulus %d" % q)
    used = [False] * q
    chosen: list = []

    def rec(i: int) -> bool:
        if i == len(diffs):
            return True
        d = diffs[i]
        for x in range(1, q):
            y = (x - d) % q
            if y == 0 or used[x] or used[y] or x == y:
                continue
            used[x] = used[y] = True
            chosen.append((x, y))
            if rec(i + 1):
                return True
            chosen.pop()
            used[x] = used[y] = False
        return False

    if not rec(0):
        return None
    entries = tuple((d, pair) for d, pair in zip(diffs, chosen))
    pairing = StarterPairing(q, entries)
    pairing.validate()
    return pairing


def fill_diagonals(n: int, q: int, starts: Dict[int, int]) -> TotalColoring:
    """Diagonal-pattern fragment: vertex v gets (v mod q)+1; the edge
    {i, i+s} of generator s gets ((start_s - 1 + i) mod q) + 1.

    starts maps each half-set generator s (1 <= s < n/2) to its start value
    in 1..q.  Validity is the verifier's business, not this function's.
    """
    c = TotalColoring(n)
    for v in range(n):
        c.vertex_color[v] = (v % q) + 1
    for s in sorted(starts):
        if not 1 <= s or 2 * s >= n:
            raise ConstructionError("generator %d is not a proper half-set rep" % s)
        a = starts[s]
        for i in range(n):
            c.set_edge(i, (i + s) % n, ((a - 1 + i) % q) + 1)
    return c


# ---------------------------------------------------------------------------
# Theorem pipelines


def color_complete_bipartite(m: int) -> TotalColoring:
    """Total coloring of the complete bipartite graph on evens vs odds of
    0..2m-1 (the shape of U_{2^k}) with m+2 colors."""
    if m < 1:
        raise ConstructionError("m must be >= 1")
    c = TotalColoring(2 * m)
    for i in range(m):
        c.vertex_color[2 * i] = m + 1
        c.vertex_color[2 * i + 1] = m + 2
    for i in range(m):
        for j in range(m):
            c.set_edge(2 * i, 2 * j + 1, ((i + j) % m) + 1)
    return c


@dataclass
class UnitaryEvenResult:
    coloring: TotalColoring
    part1: TotalColoring
    part2: TotalColoring
    r: int
    part1_generators: list
    part2_generators: list


def color_unitary_even(n: int) -> UnitaryEvenResult:
    """Total coloring of U_n for n = 2^k * m (m odd > 1) with phi(n)+1 colors.

    Part 1 colors the vertices and the 2-factors of the odd generators below
    r = least prime factor of m, using r colors via the literal even-column
    start rules.  Part 2 gives each remaining generator pair two fresh
    colors, alternating on the parity of the edge's base endpoint.
    """
    if n % 2 != 0:
        raise ConstructionError("n must be even")
    m = n
    while m % 2 == 0:
        m //= 2
    if m == 1:
        raise ConstructionError(
            "n is a power of two: use color_complete_bipartite(n/2)"
        )
    r = least_prime_factor(m)
    G = build_unitary(n)
    half = G.circulant.half_set()
    part1_gens = [s for s in range(1, r, 2)]
    table = start_entries(r, [s + 1 for s in part1_gens], n)
    part1 = fill_diagonals(n, r, {s: table.start[s + 1] for s in part1_gens})

    part2 = TotalColoring(n)
    part2_gens = [s for s in half if s not in part1_gens]
    for p, s in enumerate(part2_gens, start=1):
        c_even, c_odd = r + 2 * p - 1, r + 2 * p
        for i in range(n):
            part2.set_edge(i, (i + s) % n, c_even if i % 2 == 0 else c_odd)

    combined = part1.merged_with(part2)
    _checked(G, combined, "color_unitary_even(%d)" % n)
    return UnitaryEvenResult(combined, part1, part2, r, part1_gens, part2_gens)


@dataclass
class OddCirculantResult:
    coloring: TotalColoring
    strategy: str  # "literal" or "starter"
    start_table: Optional[StartEntryTable]
    pairing: Optional[StarterPairing]
    notes: list


def color_odd_circulant(spec: CirculantSpec, strategy: str = "auto") -> OddCirculantResult:
    """Delta+1 total coloring of an odd circulant whose generators avoid and
    distinguish the residues mod Delta+1.

    Strategy "literal" applies the column rules as stated; "starter" derives
    start values from an exhaustive starter pairing over the generators'
    difference classes; "auto" tries literal first and falls back.
    """
    n = spec.n
    if n % 2 == 0:
        raise ConstructionError("n must be odd")
    q = spec.degree + 1
    if n % q != 0:
        raise ConstructionError("Delta+1 = %d does not divide n = %d" % (q, n))
    for s in spec.connection:
        if s % q == 0:
            raise ConstructionError("generator %d divisible by Delta+1" % s)
    half = spec.half_set()
    if len({s % q for s in half}) != len(half):
        raise ConstructionError(
            "half-set generators not pairwise distinct mod Delta+1"
        )
    G = build_circulant(spec)
    notes: list = []

    def attempt_literal():
        table = start_entries(q, [s + 1 for s in half], n)
        c = fill_diagonals(n, q, {s: table.start[s + 1] for s in half})
        report = verify_total(G, c)
        return table, c, report

    def attempt_starter():
        pairing = starter_search(q, [s % q for s in half])
        if pairing is None:
            return None, None, None
        starts = {s: _rho(x + 1, q) for s, (d, (x, y)) in zip(half, pairing.entries)}
        c = fill_diagonals(n, q, starts)
        report = verify_total(G, c)
        return pairing, c, report

    if strategy not in ("auto", "literal", "starter"):
        raise ConstructionError("unknown strategy %r" % strategy)

    if strategy in ("auto", "literal"):
        table, c, report = attempt_literal()
        if report.ok:
            return OddCirculantResult(c, "literal", table, None, notes)
        notes.append(
            "literal rules failed with %d conflicts" % len(report.conflicts)
        )
        if strategy == "literal":
            raise ConstructionError(
                "literal rules produce conflicts: %r" % report.conflicts[:5]
            )

    pairing, c, report = attempt_starter()
    if pairing is None:
        notes.append("no starter pairing exists")
        raise ConstructionError(
            "both strategies failed for %r: %s" % (spec, "; ".join(notes))
        )
    if not report.ok:
        notes.append("starter coloring failed verification")
        raise ConstructionError(
            "both strategies failed for %r: %s" % (spec, "; ".join(notes))
        )
    return OddCirculantResult(c, "starter", None, pairing, notes)


@dataclass
class EvenDenseResult:
    coloring: TotalColoring
    chosen_generators: tuple
    pairing: StarterPairing
    remainder_colors: int
    notes: list


def color_even_dense_circulant(spec: CirculantSpec) -> EvenDenseResult:
    """Delta+1 total coloring for dense circulants with n = 2(2k+1).

    Vertices get the repeating pattern mod 2k+1 (antipodal pairs share a
    color).  k half-set generators H with an admissible starter pairing are
    colored diagonally with 2k+1 colors; the remainder G - E(H) must stay
    connected and take Delta-2k fresh colors (even-cycle 2-coloring per
    factor, else a fan recoloring within budget).
    """
    n = spec.n
    if n % 4 != 2:
        raise ConstructionError("n must be 2 mod 4 (n = 2(2k+1))")
    q = n // 2
    k = (q - 1) // 2
    if q in spec.connection:
        raise ConstructionError("generator n/2 unsupported in this construction")
    delta = spec.degree
    if not (n // 2 <= delta < n - 1):
        raise ConstructionError("degree must satisfy n/2 <= Delta < n-1")
    G = build_circulant(spec)
    half = spec.half_set()
    budget = delta - 2 * k
    notes: list = []
    # the antipodal pairing {v, v+n/2} is itself a perfect matching of the
    # complement, so complement connectivity is not needed for this route
    notes.append(
        "complement connected: %s" % connected(complement(G))
    )
    decomposition = {f.generators[0]: f for f in two_factors(spec).factors}

    for H in itertools.combinations(half, k):
        label = "H=%s" % (list(H),)
        pairing = starter_search(q, [s % q for s in H])
        if pairing is None:
            notes.append("%s: no starter pairing" % label)
            continue
        rest = [s for s in half if s not in H]
        rest_edges = []
        for s in rest:
            rest_edges.extend(factor_edges(decomposition[s]))
        remainder = subgraph_of_edges(n, rest_edges)
        if not connected(remainder):
            notes.append("%s: remainder disconnected" % label)
            continue
        edge_colors = _color_remainder_factors(decomposition, rest, q, budget, notes, label)
        if edge_colors is None:
            rem = edge_color_vizing(remainder)
            if rem.colors_used > budget:
                notes.append(
                    "%s: remainder needs %d colors, budget %d"
                    % (label, rem.colors_used, budget)
                )
                continue
            edge_colors = {e: q + c for e, c in rem.edge_color.items()}
        starts = {s: _rho(x + 1, q) for s, (d, (x, y)) in zip(H, pairing.entries)}
        c = fill_diagonals(n, q, starts)
        for e, col in edge_colors.items():
            c.edge_color[e] = col
        report = verify_total(G, c)
        if report.ok:
            notes.append("%s: accepted" % label)
            return EvenDenseResult(c, H, pairing, budget, notes)
        notes.append("%s: verification failed (%d conflicts)" % (label, len(report.conflicts)))
    raise ConstructionError(
        "no admissible generator subset for %r: %s" % (spec, "; ".join(notes))
    )


def _color_remainder_factors(decomposition, rest, q, budget, notes, label):
    """2-color each remainder factor's cycles when all are even; None if an
    odd cycle blocks the per-factor scheme."""
    if 2 * len(rest) != budget:
        return None
    colors: dict = {}
    for t, s in enumerate(sorted(rest)):
        factor = decomposition[s]
        c1, c2 = q + 2 * t + 1, q + 2 * t + 2
        for cyc in factor.cycles:
            if len(cyc) % 2 == 1 and len(cyc) > 2:
                notes.append("%s: generator %d has odd cycles" % (label, s))
                return None
        for cyc in factor.cycles:
            if len(cyc) == 2:
                colors[ekey(cyc[0], cyc[1])] = c1
                continue
            for i in range(len(cyc)):
                u, v = cyc[i], cyc[(i + 1) % len(cyc)]
                colors[ekey(u, v)] = c1 if i % 2 == 0 else c2
    return colors


def color_complete_odd(q: int) -> TotalColoring:
    """q-color total coloring of K_q for odd q: vertex i -> (2i mod q)+1,
    edge {i,j} -> ((i+j) mod q)+1."""
    if q < 1 or q % 2 == 0:
        raise ConstructionError("q must be odd and positive")
    c = TotalColoring(q)
    for i in range(q):
        c.vertex_color[i] = (2 * i % q) + 1
    for i in range(q):
        for j in range(i + 1, q):
            c.set_edge(i, j, ((i + j) % q) + 1)
    return c


# ---------------------------------------------------------------------------
# Edge coloring subroutines


def edge_color_bipartite(G: Graph) -> Dict[tuple, int]:
    """Proper edge coloring of a bipartite graph with exactly Delta colors
    (augmenting alternating-path construction)."""
    from .graphs import bipartition

    if bipartition(G) is None:
        raise ConstructionError("graph is not bipartite")
    delta = G.max_degree
    at = [dict() for _ in range(G.n)]  # at[v][color] = neighbor
    color: Dict[tuple, int] = {}

    def free(v):
        for c in range(1, delta + 1):
            if c not in at[v]:
                return c
        raise AssertionError("no free color at vertex %d" % v)

    for (u, v) in G.edges():
        a, b = free(u), free(v)
        if a != b:
            # flip the a/b alternating path starting at v to free a there
            node, want = v, a
            path = []
            while want in at[node]:
                nxt = at[node][want]
                path.append((node, nxt, want))
                node = nxt
                want = b if want == a else a
            # two-phase flip: clearing first avoids aliasing at interior vertices
            for (x, y, c_old) in path:
                del at[x][c_old]
                del at[y][c_old]
            for (x, y, c_old) in path:
                c_new = b if c_old == a else a
                at[x][c_new] = y
                at[y][c_new] = x
                color[ekey(x, y)] = c_new
        color[ekey(u, v)] = a
        at[u][a] = v
        at[v][a] = u
    return color


@dataclass
class EdgeColoringResult:
    edge_color: Dict[tuple, int]
    colors_used: int
    delta: int
    delta_achieved: bool


def _exact_edge_coloring(G: Graph, k: int, node_limit: int = 200000):
    """Backtracking k-edge-coloring; returns a color dict, None (proved
    impossible), or "budget"."""
    edges = G.edges()
    at = [0] * G.n  # bitmask of colors used at each vertex
    assignment: Dict[tuple, int] = {}
    nodes = 0

    def rec(i: int, maxused: int):
        nonlocal nodes
        if i == len(edges):
            return True
        nodes += 1
        if nodes > node_limit:
            raise _BudgetExceeded()
        u, v = edges[i]
        forbidden = at[u] | at[v]
        top = min(k, maxused + 1)
        for c in range(1, top + 1):
            bit = 1 << c
            if forbidden & bit:
                continue
            at[u] |= bit
            at[v] |= bit
            assignment[(u, v)] = c
            if rec(i + 1, max(maxused, c)):
                return True
            del assignment[(u, v)]
            at[u] &= ~bit
            at[v] &= ~bit
        return False

    try:
        if rec(0, 0):
            return dict(assignment)
        return None
    except _BudgetExceeded:
        return "budget"


class _BudgetExceeded(Exception):
    pass


def edge_color_vizing(G: Graph, exact_node_limit: int = 200000) -> EdgeColoringResult:
    """Proper edge coloring with at most Delta+1 colors.

    First attempts an exact Delta-coloring by bounded backtracking (desk
    scale); on failure or budget exhaustion falls back to Misra-Gries fan
    recoloring with the Delta+1 palette.  delta_achieved reports whether the
    returned coloring uses only Delta colors.
    """
    delta = G.max_degree
    if delta == 0:
        return EdgeColoringResult({}, 0, 0, True)
    exact = _exact_edge_coloring(G, delta, exact_node_limit)
    if isinstance(exact, dict):
        used = len(set(exact.values()))
        return EdgeColoringResult(exact, used, delta, True)
    colors = _misra_gries(G, delta)
    used = len(set(colors.values()))
    return EdgeColoringResult(colors, used, delta, used <= delta)


def _misra_gries(G: Graph, delta: int) -> Dict[tuple, int]:
    """Misra-Gries fan recoloring with palette 1..Delta+1."""
    K = delta + 1
    at = [dict() for _ in range(G.n)]  # at[v][color] = neighbor
    color: Dict[tuple, int] = {}

    def free(v):
        for c in range(1, K + 1):
            if c not in at[v]:
                return c
        raise AssertionError("no free color at %d" % v)

    def set_color(x, y, c):
        e = ekey(x, y)
        old = color.get(e)
        if old is not None:
            del at[x][old]
            del at[y][old]
        color[e] = c
        at[x][c] = y
        at[y][c] = x

    for (u, v) in G.edges():
        # maximal fan of u starting at v
        fan = [v]
        in_fan = {v}
        while True:
            d = free(fan[-1])
            w = at[u].get(d)
            if w is None or w in in_fan:
                break
            fan.append(w)
            in_fan.add(w)
        c = free(u)
        d = free(fan[-1])
        if d not in at[u]:
            j = len(fan) - 1
        else:
            # invert the c/d alternating path starting at u
            path = []
            node, want = u, d
            while want in at[node]:
                nxt = at[node][want]
                path.append((node, nxt, want))
                node = nxt
                want = c if want == d else d
            # clear the whole path before reassigning: flipping in place would
            # transiently alias colors at interior vertices
            for (x, y, c_old) in path:
                del at[x][c_old]
                del at[y][c_old]
                del color[ekey(x, y)]
            for (x, y, c_old) in path:
                set_color(x, y, c if c_old == d else d)
            # largest fan prefix still valid whose tip has d free
            j = None
            for idx in range(len(fan) - 1, -1, -1):
                if d in at[fan[idx]]:
                    continue
                ok = True
                for i2 in range(idx):
                    cc = color.get(ekey(u, fan[i2 + 1]))
                    if cc is None or cc in at[fan[i2]]:
                        ok = False
                        break
                if ok:
                    j = idx
                    break
            if j is None:
                raise AssertionError("fan recoloring lost its invariant")
        # rotate fan[0..j] and finish with d
        shift = [color[ekey(u, fan[i2 + 1])] for i2 in range(j)]
        for i2 in range(j + 1):
            e = ekey(u, fan[i2])
            old = color.pop(e, None)
            if old is not None:
                del at[u][old]
                del at[fan[i2]][old]
        for i2 in range(j):
            set_color(u, fan[i2], shift[i2])
        set_color(u, fan[j], d)
    return color


# ---------------------------------------------------------------------------
# Matchings and clique covers


def perfect_matching(G: Graph) -> Optional[list]:
    """A perfect matching as a sorted edge list, or None (blossom search via
    networkx maximum-cardinality matching)."""
    if G.n % 2 == 1:
        return None
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    M = nx.max_weight_matching(H, maxcardinality=True)
    if 2 * len(M) != G.n:
        return None
    return sorted(ekey(u, v) for (u, v) in M)


@dataclass
class CliqueCover:
    """Vertex-disjoint cliques of equal size omega covering all vertices."""

    omega: int
    cliques: tuple


def clique_cover_disjoint(G: Graph) -> Optional[CliqueCover]:
    """Partition of the vertices into n/omega maximum cliques by exact-cover
    backtracking; None if no such partition exists."""
    from .oracles import maximal_cliques

    stats = maximal_cliques(G)
    omega = stats.omega
    if omega == 0 or G.n % omega != 0:
        raise ConstructionError(
            "clique number %d does not divide n = %d" % (omega, G.n)
        )
    maximum = [tuple(sorted(c)) for c in stats.cliques if len(c) == omega]
    by_vertex: Dict[int, list] = {v: [] for v in range(G.n)}
    for cl in maximum:
        for v in cl:
            by_vertex[v].append(cl)

    chosen: list = []
    covered = set()

    def rec():
        if len(covered) == G.n:
            return True
        v = min(u for u in range(G.n) if u not in covered)
        for cl in by_vertex[v]:
            if covered.isdisjoint(cl):
                covered.update(cl)
                chosen.append(cl)
                if rec():
                    return True
                chosen.pop()
                covered.difference_update(cl)
        return False

    if not rec():
        return None
    return CliqueCover(omega, tuple(sorted(chosen)))


@dataclass
class PerfectCayleyResult:
    coloring: TotalColoring
    chi: int
    cover: Optional[CliqueCover]
    remainder_colors: int
    total_colors: int
    type_one: bool  # remainder achieved a class-I edge coloring


def color_perfect_cayley(G: Graph) -> PerfectCayleyResult:
    """TCC-witnessing total coloring of a perfect Cayley graph with odd
    chromatic number dividing n.

    Complete graphs short-circuit to the odd-clique scheme.  Otherwise the
    vertices get a proper chi-coloring, a disjoint cover by maximum cliques
    is colored by transplanting the K_chi scheme so transplanted vertex
    colors agree with the assigned ones, and the remainder takes at most
    Delta - chi + 2 fresh colors.
    """
    from .oracles import exact_chromatic, is_perfect

    if not is_perfect(G):
        raise ConstructionError("graph is not perfect")
    chi, vertex_colors = exact_chromatic(G)
    if chi % 2 == 0:
        raise ConstructionError("chromatic number %d is even" % chi)
    if G.n % chi != 0:
        raise ConstructionError("chromatic number %d does not divide n" % chi)
    delta = G.max_degree

    if delta == G.n - 1:  # complete graph
        c = color_complete_odd(G.n)
        _checked(G, c, "color_perfect_cayley(complete)")
        return PerfectCayleyResult(c, chi, None, 0, G.n, True)

    cover = clique_cover_disjoint(G)
    if cover is None:
        raise ConstructionError("no disjoint cover by maximum cliques")
    if cover.omega != chi:
        raise ConstructionError(
            "clique number %d differs from chromatic number %d" % (cover.omega, chi)
        )

    half = (chi + 1) // 2  # inverse of 2 mod chi
    c = TotalColoring(G.n)
    for v in range(G.n):
        c.vertex_color[v] = vertex_colors[v]
    for cl in cover.cliques:
        pos = {v: ((vertex_colors[v] - 1) * half) % chi for v in cl}
        for i, u in enumerate(cl):
            for v in cl[i + 1:]:
                c.set_edge(u, v, ((pos[u] + pos[v]) % chi) + 1)

    clique_edges = set(c.edge_color)
    rest_edges = [e for e in G.edges() if e not in clique_edges]
    remainder = subgraph_of_edges(G.n, rest_edges)
    rem = edge_color_vizing(remainder)
    for e, col in rem.edge_color.items():
        c.edge_color[e] = chi + col
    _checked(G, c, "color_perfect_cayley")
    total = chi + rem.colors_used
    type_one = rem.colors_used == delta - chi + 1
    return PerfectCayleyResult(c, chi, cover, rem.colors_used, total, type_one)
