"""Command line interface.

Subcommands: generate, spectral, rainbow, decompose, check-inequalities,
experiment.  Graphs travel as JSON files ({"n": int, "edges": [[u, v, color],
...]}); all randomized commands are reproducible from their --seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict

from .decomposition import (
    DecompositionError,
    DecompositionParams,
    crossing_edges_bound,
    decompose,
)
from .generators import (
    color_one_factorization,
    color_rainbow,
    color_random_bounded,
    gen_chung_lu,
    gen_complete,
    gen_complete_bipartite,
    gen_random_regular,
)
from .graphs import GraphError, VertexPartition, load_graph, save_graph
from .harness import SpecError, emit_csv, emit_json, load_spec, run_experiment
from .partitions import random_vertex_partition
from .rainbow import max_rainbow_forest, peel_disjoint_trees, schrijver_bruteforce
from .seeding import rng_from
from .spectral import check_cheeger_inequality, spectrum


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_graph(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return load_graph(fh.read())


def _cmd_generate(args) -> int:
    dims = args.dims
    if args.family == "complete":
        _expect_dims(dims, 1, "complete N")
        g = gen_complete(int(dims[0]))
    elif args.family == "bipartite":
        _expect_dims(dims, 2, "bipartite A B")
        g = gen_complete_bipartite(int(dims[0]), int(dims[1]))
    elif args.family == "regular":
        _expect_dims(dims, 2, "regular N D")
        g = gen_random_regular(int(dims[0]), int(dims[1]), seed=args.seed)
    else:
        if len(dims) < 2:
            raise ValueError("chunglu needs at least two weights: chunglu W1 W2 ...")
        g = gen_chung_lu([float(x) for x in dims], seed=args.seed)

    coloring = args.coloring
    if coloring == "rainbow":
        g = color_rainbow(g)
    elif coloring == "factorization":
        g = color_one_factorization(g)
    elif coloring.startswith("bounded:"):
        pieces = coloring.split(":")
        if len(pieces) != 3:
            raise ValueError("bounded coloring spelled bounded:MAX_CLASS_SIZE:NUM_COLORS")
        g = color_random_bounded(g, int(pieces[1]), int(pieces[2]), seed=args.seed + 1)
    else:
        raise ValueError(f"unknown coloring {coloring!r}")
    _write_output(save_graph(g) + "\n", args.output)
    return 0


def _expect_dims(dims, count, usage):
    if len(dims) != count:
        raise ValueError(f"expected dims: {usage}")


def _cmd_spectral(args) -> int:
    g = _read_graph(args.graph)
    summary = spectrum(g)
    out: dict = {"lambda1": summary.lambda1}
    if args.full_spectrum:
        out["eigenvalues"] = list(summary.eigenvalues)
    if args.cheeger:
        report = check_cheeger_inequality(g)
        out["h"] = report.h
        out["cheeger_holds"] = report.holds
    _write_output(_dump(out), args.output)
    return 0


def _cmd_rainbow(args) -> int:
    g = _read_graph(args.graph)
    forest = max_rainbow_forest(g)
    out: dict = {
        "max_forest_size": forest.size,
        "has_rst": forest.spanning,
        "forest_edges": [list(g.edges[i]) for i in forest.edge_indices],
    }
    if args.schrijver:
        verdict = schrijver_bruteforce(g)
        out["schrijver"] = {
            "has_rst": verdict.has_rst,
            "violating_partition": (
                None
                if verdict.violating_partition is None
                else verdict.violating_partition.as_lists()
            ),
        }
    if args.peel is not None:
        trees = peel_disjoint_trees(g, args.peel)
        out["peeled"] = [[list(g.edges[i]) for i in t.edge_indices] for t in trees]
    _write_output(_dump(out), args.output)
    return 0


def _cmd_decompose(args) -> int:
    g = _read_graph(args.graph)
    params = DecompositionParams(
        C=args.C, epsilon=args.epsilon, seed=args.seed, max_retries=args.retries
    )
    try:
        result = decompose(
            g,
            params,
            verify=args.verify_lemma4,
            enforce_color_cap=not args.ignore_color_cap,
        )
    except DecompositionError as exc:
        _write_output(
            _dump(
                {
                    "q": 0,
                    "success": False,
                    "reason": str(exc),
                    "trees": [],
                    "lemma4": None,
                    "attempts": 0,
                }
            ),
            args.output,
        )
        return 0
    _write_output(
        _dump(
            {
                "q": result.q,
                "success": result.success,
                "trees": [
                    None if t is None else list(t.edge_indices) for t in result.trees
                ],
                "forest_sizes": list(result.forest_sizes),
                "lemma4": None if result.checks is None else asdict(result.checks),
                "attempts": result.attempts,
            }
        ),
        args.output,
    )
    return 0


def _cmd_check_inequalities(args) -> int:
    g = _read_graph(args.graph)
    partitions: list[VertexPartition] = []
    source = args.partitions
    if source.startswith("random:"):
        count = int(source.split(":", 1)[1])
        rng = rng_from(args.seed)
        partitions = [random_vertex_partition(g.n, rng) for _ in range(count)]
    else:
        with open(source, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        for parts in raw:
            partitions.append(
                VertexPartition(n=g.n, parts=tuple(frozenset(p) for p in parts))
            )
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "lhs", "rhs", "x", "M", "holds"])
    for partition in partitions:
        report = crossing_edges_bound(g, partition)
        writer.writerow(
            [
                report.t,
                report.lhs,
                repr(report.rhs),
                report.x,
                repr(report.M),
                "true" if report.holds else "false",
            ]
        )
    _write_output(buf.getvalue(), args.output)
    return 0


def _cmd_experiment(args) -> int:
    try:
        with open(args.spec, "r", encoding="utf-8") as fh:
            spec = load_spec(fh.read())
    except OSError as exc:
        print(f"cannot read spec: {exc}", file=sys.stderr)
        return 3
    except SpecError as exc:
        print(f"invalid spec: {exc}", file=sys.stderr)
        return 2
    records, summary = run_experiment(spec, workers=args.workers)
    try:
        _write_output(
            emit_csv(records, include_timing=args.timing),
            args.output or spec.output_csv,
        )
        summary_path = args.summary or spec.output_summary
        if summary_path:
            _write_output(emit_json(summary), summary_path)
    except OSError as exc:
        print(f"cannot write results: {exc}", file=sys.stderr)
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbow-decomp",
        description="Edge-disjoint rainbow spanning trees: spectral decomposition and certification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a graph family to JSON")
    p.add_argument("family", choices=("complete", "bipartite", "regular", "chunglu"))
    p.add_argument("dims", nargs="*", help="complete N | bipartite A B | regular N D | chunglu W1 W2 ...")
    p.add_argument("--coloring", default="rainbow", help="rainbow | factorization | bounded:K:S")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("spectral", help="normalized Laplacian spectrum and Cheeger check")
    p.add_argument("graph")
    p.add_argument("--full-spectrum", action="store_true")
    p.add_argument("--cheeger", action="store_true", help="exact Cheeger constant (small n)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_spectral)

    p = sub.add_parser("rainbow", help="maximum rainbow forest and existence checks")
    p.add_argument("graph")
    p.add_argument("--schrijver", action="store_true", help="brute-force partition criterion (small n)")
    p.add_argument("--peel", type=int, default=None, metavar="K", help="greedily peel up to K disjoint trees")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_rainbow)

    p = sub.add_parser("decompose", help="random edge decomposition with per-part tree extraction")
    p.add_argument("graph")
    p.add_argument("--C", type=float, required=True)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=50)
    p.add_argument("--verify-lemma4", action="store_true", help="attach the per-part property report")
    p.add_argument("--ignore-color-cap", action="store_true", help="warn instead of failing on oversized color classes")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("check-inequalities", help="crossing-edge lower bound over partitions, as CSV")
    p.add_argument("graph")
    p.add_argument("--partitions", required=True, help="JSON file of partitions, or random:N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_check_inequalities)

    p = sub.add_parser("experiment", help="batch decomposition trials from a spec file")
    p.add_argument("spec")
    p.add_argument("-o", "--output", default=None, help="results CSV (default stdout)")
    p.add_argument("--summary", default=None, help="summary JSON path")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall times (breaks byte-reproducibility)")
    p.set_defaults(func=_cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
