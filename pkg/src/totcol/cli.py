"""Command-line surface: generate graphs, run constructions, verify, run
exact oracles, classify, and reproduce the bundled golden tables.

Exit codes: 0 success, 1 verification conflicts or golden-table mismatch,
2 preconditions of the chosen method unmet, 3 inconclusive (budget),
4 I/O or format error.
"""
from __future__ import annotations

import argparse
import math
import sys
from importlib import resources

from . import constructions, coloring, graphs, oracles
from .coloring import (
    TotalColoring,
    adjacency_matrix_csv,
    matrix_to_csv,
    read_coloring,
    render_matrix,
    verify_total,
    write_coloring,
)
from .graphs import CirculantSpec, GroupTable, build_cayley, build_circulant, build_unitary

EXIT_OK = 0
EXIT_CONFLICTS = 1
EXIT_PRECONDITION = 2
EXIT_INCONCLUSIVE = 3
EXIT_IO = 4


def _read_group_table(path) -> GroupTable:
    with open(path) as fh:
        tokens = fh.read().split()
    if len(tokens) < 2:
        raise graphs.GraphError("group table file too short")
    n, identity = int(tokens[0]), int(tokens[1])
    body = [int(x) for x in tokens[2:]]
    if len(body) != n * n:
        raise graphs.GraphError("expected %d table entries, got %d" % (n * n, len(body)))
    product = [body[i * n:(i + 1) * n] for i in range(n)]
    return GroupTable(n, product, identity)


def cmd_gen(args) -> int:
    if args.kind == "unitary":
        G = build_unitary(args.n)
    elif args.kind == "circulant":
        G = build_circulant(CirculantSpec(args.n, args.generators))
    else:  # cayley
        table = _read_group_table(args.table)
        G = build_cayley(table, args.generators)
    out = args.output or ("%s_%d.col" % (args.kind, G.n))
    graphs.write_dimacs(G, out)
    print("wrote %s (n=%d, m=%d)" % (out, G.n, G.edge_count))
    return EXIT_OK


def _detect_unitary(G) -> bool:
    if G.circulant is None:
        return False
    n = G.n
    units = frozenset(i for i in range(1, n) if math.gcd(i, n) == 1)
    return G.circulant.connection == units


def _pick_method(G) -> str:
    spec = G.circulant
    if spec is not None and _detect_unitary(G):
        n = G.n
        if n & (n - 1) == 0 and n >= 2:
            return "thm2.1"
        if n % 2 == 0:
            return "thm2.2"
    if spec is not None and G.n % 2 == 1:
        q = spec.degree + 1
        half = spec.half_set()
        if (
            G.n % q == 0
            and all(s % q for s in spec.connection)
            and len({s % q for s in half}) == len(half)
        ):
            return "thm2.3"
    if spec is not None and G.n % 4 == 2:
        delta = spec.degree
        if G.n // 2 not in spec.connection and G.n // 2 <= delta < G.n - 1:
            return "thm2.5"
    if G.n <= 20:
        try:
            if oracles.is_perfect(G):
                chi, _ = oracles.exact_chromatic(G)
                if chi % 2 == 1 and G.n % chi == 0:
                    return "thm2.7"
        except oracles.OracleError:
            pass
    raise constructions.ConstructionError("no method's preconditions match this graph")


def cmd_color(args) -> int:
    G = graphs.read_dimacs(args.graph)
    method = args.method
    if method == "auto":
        method = _pick_method(G)
        print("auto-selected method: %s" % method)

    notes = []
    if method == "thm2.1":
        n = G.n
        if not (_detect_unitary(G) and n >= 2 and n & (n - 1) == 0):
            raise constructions.ConstructionError(
                "thm2.1 expects the unitary graph of a power of two"
            )
        result_coloring = constructions.color_complete_bipartite(n // 2)
    elif method == "thm2.2":
        if not _detect_unitary(G) or G.n % 2:
            raise constructions.ConstructionError("thm2.2 expects an even unitary graph")
        res = constructions.color_unitary_even(G.n)
        result_coloring = res.coloring
        notes.append("part-1 generators %s, part-2 generators %s"
                     % (res.part1_generators, res.part2_generators))
    elif method == "thm2.3":
        if G.circulant is None:
            raise constructions.ConstructionError("thm2.3 needs circulant provenance")
        res = constructions.color_odd_circulant(G.circulant, strategy=args.strategy)
        result_coloring = res.coloring
        notes.append("strategy used: %s" % res.strategy)
        if res.strategy == "starter":
            notes.append("starter fallback used")
        notes.extend(res.notes)
    elif method == "thm2.5":
        if G.circulant is None:
            raise constructions.ConstructionError("thm2.5 needs circulant provenance")
        res = constructions.color_even_dense_circulant(G.circulant)
        result_coloring = res.coloring
        notes.append("chosen generators H = %s" % (list(res.chosen_generators),))
        notes.extend(res.notes)
    elif method == "thm2.7":
        res = constructions.color_perfect_cayley(G)
        result_coloring = res.coloring
        notes.append("chi = %d, remainder colors = %d, total = %d"
                     % (res.chi, res.remainder_colors, res.total_colors))
        notes.append("type I achieved" if res.type_one else "type I not certified")
    else:
        raise constructions.ConstructionError("unknown method %r" % method)

    report = verify_total(G, result_coloring)
    for note in notes:
        print("note: %s" % note)
    print("colors used: %d" % report.colors_used)
    print("verification: %s" % ("clean" if report.ok else "CONFLICTS"))
    out = args.output or "coloring.tc"
    if args.format == "csv-matrix":
        matrix_to_csv(render_matrix(G, result_coloring), out)
    else:
        write_coloring(result_coloring, out)
    print("wrote %s" % out)
    return EXIT_OK if report.ok else EXIT_CONFLICTS


def cmd_verify(args) -> int:
    G = graphs.read_dimacs(args.graph)
    if args.coloring.endswith(".csv"):
        from .coloring import matrix_from_csv, parse_matrix

        c = parse_matrix(matrix_from_csv(args.coloring).grid)
    else:
        c = read_coloring(args.coloring)
    report = verify_total(G, c)
    for err in report.coverage_errors:
        print("coverage: %r" % (err,))
    for conflict in report.conflicts:
        print("conflict: %r" % (conflict,))
    print("colors used: %d" % report.colors_used)
    if report.ok:
        print("verification: clean")
        return EXIT_OK
    print("verification: FAILED (%d conflicts, %d coverage errors)"
          % (len(report.conflicts), len(report.coverage_errors)))
    return EXIT_CONFLICTS


def _budget_from(args) -> oracles.SearchBudget:
    return oracles.SearchBudget(
        max_colors=args.max_colors,
        node_limit=args.node_limit,
        time_limit_secs=args.time_limit_secs,
    )


def cmd_oracle(args) -> int:
    G = graphs.read_dimacs(args.graph)
    if args.what == "total-chromatic":
        res = oracles.exact_total_chromatic(G, _budget_from(args))
        if res.status != "exact":
            print("inconclusive after %d nodes" % res.nodes)
            return EXIT_INCONCLUSIVE
        print("total chromatic number: %d (lower bound %d, %d nodes)"
              % (res.value, res.lower_bound, res.nodes))
        if args.output:
            write_coloring(res.coloring, args.output)
            print("certificate written to %s" % args.output)
        return EXIT_OK
    if args.what == "chromatic":
        chi, cert = oracles.exact_chromatic(G, _budget_from(args))
        print("chromatic number: %d" % chi)
        return EXIT_OK
    if args.what == "cliques":
        stats = oracles.maximal_cliques(G)
        print("clique number: %d" % stats.omega)
        print("maximal cliques: %d" % stats.maximal_count)
        print("maximum cliques: %d" % stats.maximum_count)
        for cl in stats.cliques:
            print("clique: %s" % (list(cl),))
        return EXIT_OK
    if args.what == "perfect":
        print("perfect: %s" % oracles.is_perfect(G))
        return EXIT_OK
    if args.what == "conformable":
        if args.q is None:
            print("conformable oracle needs --q", file=sys.stderr)
            return EXIT_IO
        ok, partition = oracles.conformable_exists(G, args.q)
        print("conformable(%d): %s" % (args.q, ok))
        if ok:
            print("classes: %s" % (partition,))
        return EXIT_OK
    raise AssertionError(args.what)


def cmd_classify(args) -> int:
    G = graphs.read_dimacs(args.graph)
    res = oracles.classify_type(G, _budget_from(args))
    label = {"type1": "TypeI", "type2": "TypeII", "inconclusive": "inconclusive"}
    print("classification: %s" % label[res.kind])
    print("max degree: %d" % res.delta)
    print("evidence: %s (%d nodes)" % (res.detail, res.nodes))
    if res.value is not None:
        print("total chromatic number: %d" % res.value)
    if res.certificate is not None and args.output:
        write_coloring(res.certificate, args.output)
        print("certificate written to %s" % args.output)
    return EXIT_OK if res.kind != "inconclusive" else EXIT_INCONCLUSIVE


GOLDEN_TABLES = (
    "table1_adjacency.csv",
    "table2_part1.csv",
    "table3_part2.csv",
    "table4_final.csv",
)


def regenerate_tables(outdir) -> list:
    """Regenerate the four U_24 tables into outdir; returns the paths."""
    import os

    G = build_unitary(24)
    res = constructions.color_unitary_even(24)
    paths = [os.path.join(outdir, name) for name in GOLDEN_TABLES]
    adjacency_matrix_csv(G, paths[0])
    matrix_to_csv(render_matrix(G, res.part1, partial=True), paths[1])
    matrix_to_csv(render_matrix(G, res.part2, partial=True), paths[2])
    matrix_to_csv(render_matrix(G, res.coloring), paths[3])
    return paths


def cmd_tables(args) -> int:
    import os

    os.makedirs(args.outdir, exist_ok=True)
    paths = regenerate_tables(args.outdir)
    status = EXIT_OK
    for name, path in zip(GOLDEN_TABLES, paths):
        golden = resources.files("totcol.golden").joinpath(name).read_bytes()
        mine = open(path, "rb").read()
        if golden == mine:
            print("%s: ok (zero diff)" % name)
        else:
            print("%s: MISMATCH" % name)
            status = EXIT_CONFLICTS
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totcol",
        description="Total colorings of circulant and Cayley graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph file")
    gen_sub = p_gen.add_subparsers(dest="kind", required=True)
    g_uni = gen_sub.add_parser("unitary")
    g_uni.add_argument("n", type=int)
    g_circ = gen_sub.add_parser("circulant")
    g_circ.add_argument("n", type=int)
    g_circ.add_argument("generators", type=int, nargs="+")
    g_cay = gen_sub.add_parser("cayley")
    g_cay.add_argument("table", help="group table file: n identity, then n*n products")
    g_cay.add_argument("generators", type=int, nargs="+")
    for g in (g_uni, g_circ, g_cay):
        g.add_argument("-o", "--output")
    p_gen.set_defaults(func=cmd_gen)

    p_color = sub.add_parser("color", help="run a constructive coloring")
    p_color.add_argument("graph")
    p_color.add_argument("--method", default="auto",
                         choices=["auto", "thm2.1", "thm2.2", "thm2.3", "thm2.5", "thm2.7"])
    p_color.add_argument("--strategy", default="auto",
                         choices=["auto", "literal", "starter"])
    p_color.add_argument("--format", default="coloring",
                         choices=["coloring", "csv-matrix"])
    p_color.add_argument("-o", "--output")
    p_color.set_defaults(func=cmd_color)

    p_verify = sub.add_parser("verify", help="verify a (graph, coloring) pair")
    p_verify.add_argument("graph")
    p_verify.add_argument("coloring")
    p_verify.set_defaults(func=cmd_verify)

    def add_budget(p):
        p.add_argument("--max-colors", type=int, default=64)
        p.add_argument("--node-limit", type=int, default=50_000_000)
        p.add_argument("--time-limit-secs", type=float, default=600.0)

    p_oracle = sub.add_parser("oracle", help="run an exact solver")
    p_oracle.add_argument("graph")
    p_oracle.add_argument("--what", default="total-chromatic",
                          choices=["total-chromatic", "chromatic", "cliques",
                                   "perfect", "conformable"])
    p_oracle.add_argument("--q", type=int, default=None,
                          help="class count for the conformable oracle")
    p_oracle.add_argument("-o", "--output")
    add_budget(p_oracle)
    p_oracle.set_defaults(func=cmd_oracle)

    p_classify = sub.add_parser("classify", help="certify type I / type II")
    p_classify.add_argument("graph")
    p_classify.add_argument("-o", "--output")
    add_budget(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_tables = sub.add_parser("tables", help="regenerate the U_24 tables and diff goldens")
    p_tables.add_argument("--outdir", default=".")
    p_tables.set_defaults(func=cmd_tables)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (constructions.ConstructionError,) as exc:
        print("precondition error: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION
    except oracles.OracleError as exc:
        print("inconclusive: %s" % exc, file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (graphs.GraphError, coloring.ColoringError, OSError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
