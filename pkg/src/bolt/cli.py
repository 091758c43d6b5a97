"""Command-line harness.

Subcommands: generate, exact, probs, estimate, order, korder, evaluate,
analyze-levels.  Data goes to stdout (or ``-o``); a one-line summary,
including the seed used, goes to stderr.

Exit codes: 0 ok, 2 edge-list parse error, 3 bad configuration (unknown
option, missing file, unknown node), 4 empty graph, 5 undefined metric.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field

import numpy as np

from . import analysis, metrics
from .errors import BoltError, ConfigError
from .estimator import DEFAULT_SAMPLES, estimate, fresh_seed
from .generators import ba_k_for_x, er_probability_for_x, generate_ba, generate_er
from .graph import Graph, read_edge_list, write_edge_list, write_mapping
from .ordering import k_betweenness_ordering
from .sampling import MODELS, make_model
from .shortest_paths import distances, exact_betweenness

EXIT_CODES = """exit codes:
  0  success
  2  malformed edge-list file
  3  configuration error (bad option, missing file, unknown node)
  4  empty graph after cleaning
  5  undefined metric (e.g. no node with positive betweenness)
"""


@dataclass
class ExperimentConfig:
    command: str
    file: str | None = None
    gen: str | None = None
    model: str = "eddbm"
    T: int = DEFAULT_SAMPLES
    seed: int | None = None
    pair_budget: int | None = None
    relax_thresholds: list = field(default_factory=lambda: list(metrics.DEFAULT_THRESHOLDS))
    output: str | None = None
    fmt: str = "csv"
    threads: int = 1

    def validate(self):
        if self.T < 1:
            raise ConfigError("T must be at least 1")
        if self.threads < 1:
            raise ConfigError("--threads must be at least 1")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ConfigError.exit_code, f"{self.prog}: error: {message}\n")


def parse_generator_spec(spec: str, seed: int) -> Graph:
    """Build a graph from ``er:<n>:<p>``, ``ba:<n>:<k>``, ``er-x:<n>:<x>`` or ``ba-x:<n>:<x>``."""
    try:
        kind, n, param = spec.split(":")
        n = int(n)
        if kind == "er":
            return generate_er(n, float(param), seed)
        if kind == "ba":
            return generate_ba(n, int(param), seed)
        if kind == "er-x":
            return generate_er(n, er_probability_for_x(n, float(param)), seed)
        if kind == "ba-x":
            return generate_ba(n, ba_k_for_x(n, float(param)), seed)
    except BoltError:
        raise
    except ValueError as exc:
        raise ConfigError(f"bad generator spec {spec!r}: {exc}") from None
    raise ConfigError(f"unknown generator {kind!r} in {spec!r}")


def _load_graph(args) -> Graph:
    if args.file:
        if not os.path.exists(args.file):
            raise ConfigError(f"no such file: {args.file}")
        return read_edge_list(args.file)
    graph_seed = args.graph_seed if args.graph_seed is not None else args.seed
    return parse_generator_spec(args.gen, graph_seed)


def _node(g: Graph, label: str) -> int:
    try:
        return g.index_of(label)
    except KeyError:
        raise ConfigError(f"unknown node label {label!r}") from None


def _num(x: float) -> str:
    return repr(float(x))


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _summary(msg: str):
    print(msg, file=sys.stderr)


def cmd_generate(args):
    g = parse_generator_spec(args.gen, args.seed)
    with _output(args.output) as out:
        write_edge_list(g, out, header=f"generator {args.gen} seed {args.seed}")
    if args.mapping:
        write_mapping(g, args.mapping)
    _summary(f"generated {args.gen}: n={g.node_count} m={g.edge_count} seed={args.seed}")


def cmd_exact(args):
    g = _load_graph(args)
    bc = exact_betweenness(g, args.threads)
    with _output(args.output) as out:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["node_label", "betweenness"])
        for lab, score in zip(g.labels, bc):
            w.writerow([lab, _num(score)])
    _summary(f"exact betweenness: n={g.node_count} m={g.edge_count} "
             f"zero-bc={int(np.sum(bc == 0))}")


def cmd_probs(args):
    g = _load_graph(args)
    v = _node(g, args.node)
    dist = distances(g, v)
    models = sorted(MODELS) if args.model == "all" else [args.model]
    with _output(args.output) as out:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["node_label", "distance", "probability", "model"])
        for name in models:
            prob = make_model(name, g, v).prob
            for i, lab in enumerate(g.labels):
                if i != v:
                    w.writerow([lab, int(dist[i]) if dist[i] >= 0 else "inf", _num(prob[i]), name])
    _summary(f"probabilities for node {args.node}: models={','.join(models)}")


def cmd_estimate(args):
    g = _load_graph(args)
    v = _node(g, args.node)
    res = estimate(g, make_model(args.model, g, v), v, args.samples, args.seed, args.threads)
    payload = {"node": g.labels[v], "estimate": res.estimate, "samples": res.samples,
               "model": res.model, "seed": args.seed}
    with _output(args.output) as out:
        out.write(json.dumps(payload) + "\n")
    _summary(f"estimate node={args.node} model={args.model} T={args.samples} seed={args.seed}")


def _ordering_payload(g, res):
    return {"ranking": [{"label": g.labels[v], "estimate": e}
                        for v, e in zip(res.nodes, res.estimates)],
            "verdict": res.verdict, "seed": res.seed}


def cmd_order(args):
    g = _load_graph(args)
    labels = args.nodes.split(",")
    if len(labels) != 2:
        raise ConfigError("order takes exactly two comma-separated node labels")
    nodes = [_node(g, lab) for lab in labels]
    if nodes[0] == nodes[1]:
        raise ConfigError("order needs two different nodes")
    res = k_betweenness_ordering(g, nodes, args.samples, args.seed, args.model,
                                 args.tie_eps, args.threads)
    with _output(args.output) as out:
        out.write(json.dumps(_ordering_payload(g, res)) + "\n")
    _summary(f"order {labels[0]} vs {labels[1]}: {res.verdict} seed={args.seed}")


def cmd_korder(args):
    g = _load_graph(args)
    if args.nodes:
        nodes = [_node(g, lab) for lab in args.nodes.split(",")]
    elif args.random_k:
        if not 2 <= args.random_k <= g.node_count:
            raise ConfigError("--random-k must lie in [2, n]")
        rng = np.random.default_rng(np.random.SeedSequence((args.seed, 3 << 20)))
        nodes = [int(x) for x in rng.choice(g.node_count, args.random_k, replace=False)]
    else:
        raise ConfigError("korder needs --nodes or --random-k")
    if len(set(nodes)) != len(nodes) or len(nodes) < 2:
        raise ConfigError("korder needs at least two distinct nodes")
    res = k_betweenness_ordering(g, nodes, args.samples, args.seed, args.model,
                                 args.tie_eps, args.threads)
    with _output(args.output) as out:
        out.write(json.dumps(_ordering_payload(g, res)) + "\n")
    _summary(f"korder k={len(nodes)} seed={args.seed}")


def cmd_evaluate(args):
    g = _load_graph(args)
    instance = args.instance or args.gen or os.path.basename(args.file)
    exact = exact_betweenness(g, args.threads)
    models = args.model or ["eddbm"]
    reports = [metrics.evaluate(g, m, args.samples, args.seed, args.pair_budget,
                                metrics.DEFAULT_THRESHOLDS, args.repetitions, instance,
                                exact, args.threads)
               for m in models]
    with _output(args.output) as out:
        if args.format == "json":
            out.write(json.dumps([{
                "instance": r.graph_id, "model": r.model, "T": r.T,
                "avg_error": r.avg_error_pct, "efficiency": r.efficiency_pct,
                "relaxed": {str(t): x for t, x in r.relaxed.items()},
                "spearman": r.spearman, "pairs_evaluated": r.pairs_evaluated,
                "seed": args.seed} for r in reports]) + "\n")
        else:
            w = csv.writer(out, lineterminator="\n")
            w.writerow(metrics.EvaluationReport.CSV_HEADER)
            for r in reports:
                w.writerow(r.row())
    _summary(f"evaluated {instance} n={g.node_count} models={','.join(models)} seed={args.seed}")


def cmd_analyze_levels(args):
    prof = analysis.predict_levels(args.n, args.p, args.max_levels)
    seeds = [args.seed + i for i in range(args.graphs)]
    mean, std = analysis.empirical_levels(args.n, args.p, seeds, args.sources)
    depth = max(len(prof.alpha), len(mean))
    with _output(args.output) as out:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["level", "alpha_predicted", "alpha_exact_form",
                    "alpha_empirical_mean", "alpha_empirical_std"])
        for lvl in range(depth):
            row = [lvl]
            for arr in (prof.alpha, prof.alpha_exact, mean, std):
                row.append(_num(arr[lvl]) if lvl < len(arr) else "")
            w.writerow(row)
    _summary(f"level profile n={args.n} p={args.p} graphs={args.graphs} seed={args.seed}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bolt", description="Betweenness ordering by pivot sampling.",
                     epilog=EXIT_CODES, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="random seed (drawn from OS entropy and reported if omitted)")
    common.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default $BOLT_THREADS or 1)")

    graph_in = _Parser(add_help=False)
    src = graph_in.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="SNAP edge-list file")
    src.add_argument("--gen", help="generator spec: er:N:P, ba:N:K, er-x:N:X, ba-x:N:X")
    graph_in.add_argument("--graph-seed", type=int, default=None,
                          help="seed for --gen (defaults to --seed)")

    sampling = _Parser(add_help=False)
    sampling.add_argument("-T", "--samples", type=int, default=DEFAULT_SAMPLES,
                          help="pivots per estimate (default 25)")
    sampling.add_argument("--model", choices=sorted(MODELS), default="eddbm")

    p = sub.add_parser("generate", parents=[common], help="write a synthetic graph")
    p.add_argument("--gen", required=True)
    p.add_argument("--mapping", help="also write the label mapping CSV here")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("exact", parents=[common, graph_in], help="exact betweenness CSV")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("probs", parents=[common, graph_in], help="pivot probabilities CSV")
    p.add_argument("--node", required=True)
    p.add_argument("--model", choices=sorted(MODELS) + ["all"], default="all")
    p.set_defaults(func=cmd_probs)

    p = sub.add_parser("estimate", parents=[common, graph_in, sampling],
                       help="estimate one node's betweenness (JSON)")
    p.add_argument("--node", required=True)
    p.set_defaults(func=cmd_estimate)

    for name, helptext in [("order", "order two nodes"), ("korder", "order k nodes")]:
        p = sub.add_parser(name, parents=[common, graph_in, sampling], help=helptext)
        p.add_argument("--nodes", required=(name == "order"),
                       help="comma-separated node labels")
        if name == "korder":
            p.add_argument("--random-k", type=int, help="order k random nodes instead")
        p.add_argument("--tie-eps", type=float, default=0.0,
                       help="estimates closer than this count as a tie (default exact)")
        p.set_defaults(func=cmd_order if name == "order" else cmd_korder)

    p = sub.add_parser("evaluate", parents=[common, graph_in],
                       help="error/efficiency/correlation report")
    p.add_argument("-T", "--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--model", choices=sorted(MODELS), action="append",
                   help="model to evaluate (repeatable, default eddbm)")
    p.add_argument("--pair-budget", type=int, default=None,
                   help="node pairs for efficiency (default all if n <= 3000, else 1e6)")
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--instance", help="instance name for the report")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("analyze-levels", parents=[common],
                       help="predicted vs empirical BFS level sizes in G(n, p)")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--p", type=float, default=0.01)
    p.add_argument("--graphs", type=int, default=50)
    p.add_argument("--sources", type=int, default=20)
    p.add_argument("--max-levels", type=int, default=64)
    p.set_defaults(func=cmd_analyze_levels)
    return parser


def config_from_args(args) -> ExperimentConfig:
    return ExperimentConfig(
        command=args.command, file=getattr(args, "file", None), gen=getattr(args, "gen", None),
        model=str(getattr(args, "model", "eddbm")), T=getattr(args, "samples", DEFAULT_SAMPLES),
        seed=args.seed, pair_budget=getattr(args, "pair_budget", None), output=args.output,
        fmt=getattr(args, "format", "csv"), threads=args.threads)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.threads is None:
            args.threads = int(os.environ.get("BOLT_THREADS", "1"))
        if args.seed is None:
            args.seed = fresh_seed()
            _summary(f"using seed {args.seed}")
        config_from_args(args).validate()
        args.func(args)
    except BoltError as exc:
        print(f"bolt: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except BrokenPipeError:
        # downstream reader closed early (e.g. piped into head)
        sys.stderr.close()
        return 0
    except ValueError as exc:
        print(f"bolt: error: {exc}", file=sys.stderr)
        return ConfigError.exit_code
    return 0


def main():
    sys.exit(run())
