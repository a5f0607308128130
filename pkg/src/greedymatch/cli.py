"""Command line entry point: ``greedymatch gen|match|exact|sweep|aggregate``."""

from __future__ import annotations

import argparse
import logging
import sys

from . import bench, exact
from .generators import DIRECT_MAX_NODES, GraphFamily, generate
from .graph import GraphInputError, read_edge_list, write_edge_list
from .matcher import ALGORITHM_NAMES, parse_algorithm, run
from .rng import MASK32, SeededRng


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value <= MASK32:
        raise argparse.ArgumentTypeError("seed must be an unsigned 32-bit integer")
    return value


def cmd_gen(args) -> int:
    fam = GraphFamily(args.family, args.nodes, args.degree)
    g = generate(fam, SeededRng(args.seed), args.method, args.direct_max_nodes)
    write_edge_list(g, args.out)
    print(f"wrote {args.out}: n={g.n} m={g.m}")
    return 0


def cmd_match(args) -> int:
    g = read_edge_list(args.input)
    original = g.copy()
    matching, steps = run(g, parse_algorithm(args.alg), SeededRng(args.seed))
    problems = matching.violations(original)
    if problems:
        print("invalid matching: " + "; ".join(problems[:5]), file=sys.stderr)
        return 3
    print(f"size={len(matching)} o1={steps.o1} o2={steps.o2} h={steps.h}")
    if args.emit_matching:
        with open(args.emit_matching, "w") as fh:
            fh.write(f"{original.n} {len(matching)}\n")
            for u, v in matching:
                fh.write(f"{u} {v}\n")
    return 0


def cmd_exact(args) -> int:
    g = read_edge_list(args.input)
    if args.bipartite is not None:
        size = len(exact.max_matching_bipartite(g, args.bipartite))
    else:
        size = len(exact.max_matching_general(g))
    print(size)
    return 0


def cmd_sweep(args) -> int:
    cfg = bench.ExperimentConfig(
        family=args.family,
        n=args.nodes,
        c_values=bench.c_grid(args.c_from, args.c_to, args.c_step),
        algorithms=bench.parse_algorithms(args.algs),
        trials=args.trials,
        master_seed=args.seed,
        oracle=args.oracle == "on",
        force_oracle=args.force_oracle,
        method=args.method,
        direct_max_nodes=args.direct_max_nodes,
    )
    records = bench.run_sweep(cfg)
    if args.out_trials:
        bench.write_csv(records, args.out_trials, bench.TrialRecord)
    aggregates = bench.aggregate(records, require_oracle=cfg.oracle)
    if args.out_agg:
        bench.write_csv(aggregates, args.out_agg, bench.AggregateRecord)
    for a in aggregates:
        print(f"{a.family} n={a.n} c={a.c:g} {a.algorithm}: lambda={a.lambda_:.3g} "
              f"rho={a.rho:.3g} t={a.t_bar:.3g}s o1={a.f_o1:.3f} o2={a.f_o2:.3f} h={a.f_h:.3f}")
    return 0


def cmd_aggregate(args) -> int:
    records = bench.read_trials_csv(args.input)
    require = all(r.oracle_size is not None for r in records)
    bench.write_csv(bench.aggregate(records, require_oracle=require), args.out, bench.AggregateRecord)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="greedymatch", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p):
        p.add_argument("--family", choices=("general", "bipartite"), default="general")
        p.add_argument("--nodes", type=int, required=True)
        p.add_argument("--method", choices=("direct", "counted"), default=None)
        p.add_argument("--direct-max-nodes", type=int, default=DIRECT_MAX_NODES,
                       help="largest n generated edge by edge when --method is not given")

    p = sub.add_parser("gen", help="generate a random graph")
    family_args(p)
    p.add_argument("--degree", type=float, required=True)
    p.add_argument("--seed", type=_seed, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("match", help="run one greedy algorithm on an edge-list file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--alg", choices=ALGORITHM_NAMES, default="opt12-potdeg")
    p.add_argument("--seed", type=_seed, default=1)
    p.add_argument("--emit-matching", default=None)
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("exact", help="print the maximum matching size")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--bipartite", type=int, default=None, metavar="LEFT_SIZE")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("sweep", help="run the failure-rate / step-fraction experiment")
    family_args(p)
    p.add_argument("--c-from", type=float, default=1.0)
    p.add_argument("--c-to", type=float, default=10.0)
    p.add_argument("--c-step", type=float, default=0.1)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--algs", default="all", help="comma-separated names or 'all'")
    p.add_argument("--oracle", choices=("on", "off"), default="on")
    p.add_argument("--force-oracle", action="store_true")
    p.add_argument("--seed", type=_seed, default=1)
    p.add_argument("--out-trials", default=None)
    p.add_argument("--out-agg", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("aggregate", help="recompute aggregates from a per-trial CSV")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_aggregate)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (bench.ConfigError, GraphInputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
