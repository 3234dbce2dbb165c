"""Command line: generate | solve | oracle | ratio | bench."""
import argparse
import asyncio
import json
import logging
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from app import config
from app.controllers import bench_controller, graph_controller
from app.controllers.coupling_controller import approximation_ratio, ratio_over_interval, resolve_coupling
from app.controllers.ising_controller import brute_force_maxcut
from app.controllers.solve_controller import all_failed, load_graph, solve, write_outputs
from app.models import RunConfig
from app.utils.export import write_bench_csv
from app.utils.graph_io import write_graph_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RUNTIME = 3


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph", help="edge-list file (1-based 'i j [w]' lines)")
    parser.add_argument("--generator", choices=sorted(graph_controller.GENERATORS))
    parser.add_argument("--n", type=int, help="vertex count for er / cubic")
    parser.add_argument("--p", type=float, help="edge probability for er")
    parser.add_argument("--d", type=int, help="dimension for hypercube")
    parser.add_argument("--graph-seed", type=int, help="seed for the graph generator")


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mu", type=float, help="angle penalty μ (default: 1 for cos, 0 otherwise)")
    parser.add_argument("--k", type=float, default=config.DEFAULT_K, help="coupling gain K")
    parser.add_argument("--rtol", type=float, default=config.RTOL)
    parser.add_argument("--atol", type=float, default=config.ATOL)
    parser.add_argument("--grad-tol", type=float, default=config.GRAD_TOL)
    parser.add_argument("--t-max", type=float, default=config.T_MAX)
    parser.add_argument("--restarts", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0, help="base seed; restart i uses seed + i")
    parser.add_argument("--rounding-trials", type=int, default=config.ROUNDING_TRIALS)
    parser.add_argument("--eps", type=float, default=config.BINARIZATION_EPS, help="binarization tolerance")
    parser.add_argument("--record-every", type=int, default=0, help="record every k accepted steps (0: endpoints)")


def _run_config(args: argparse.Namespace, **overrides) -> RunConfig:
    fields = dict(
        graph_file=getattr(args, "graph", None),
        generator=getattr(args, "generator", None),
        n=getattr(args, "n", None),
        p=getattr(args, "p", None),
        d=getattr(args, "d", None),
        graph_seed=getattr(args, "graph_seed", None),
        coupling=getattr(args, "coupling", "cos"),
        mu=args.mu,
        k_coupling=args.k,
        rtol=args.rtol,
        atol=args.atol,
        grad_tol=args.grad_tol,
        t_max=args.t_max,
        restarts=args.restarts,
        seed=args.seed,
        rounding_trials=args.rounding_trials,
        eps=args.eps,
        record_every=args.record_every,
        output=getattr(args, "output", None),
        trajectory_csv=getattr(args, "trajectory_csv", None),
    )
    fields.update(overrides)
    return RunConfig(**fields)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxcut", description="Oscillator max-cut solver")
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("-q", "--quiet", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a generated instance as an edge list")
    gen.add_argument("generator", choices=sorted(graph_controller.GENERATORS))
    gen.add_argument("--n", type=int)
    gen.add_argument("--p", type=float)
    gen.add_argument("--d", type=int)
    gen.add_argument("--seed", type=int)
    gen.add_argument("--output", help="file to write (default: under the output directory)")
    gen.set_defaults(handler=cmd_generate)

    solve_p = sub.add_parser("solve", help="run seeded gradient flows and round them")
    _add_graph_source(solve_p)
    solve_p.add_argument("--coupling", default="cos", help="cos | g2 | g2-fourier:K")
    _add_run_options(solve_p)
    solve_p.add_argument("--output", help="result JSON path")
    solve_p.add_argument("--trajectory-csv", help="trajectory CSV of the best restart")
    solve_p.set_defaults(handler=cmd_solve)

    oracle = sub.add_parser("oracle", help="exact max-cut by exhaustive search")
    _add_graph_source(oracle)
    oracle.set_defaults(handler=cmd_oracle)

    ratio = sub.add_parser("ratio", help="approximation ratio of a coupling")
    ratio.add_argument("--coupling", default="cos")
    ratio.add_argument("--lo", type=float)
    ratio.add_argument("--hi", type=float)
    ratio.set_defaults(handler=cmd_ratio)

    bench = sub.add_parser("bench", help="compare couplings and penalties over instances")
    bench.add_argument("--graphs", nargs="*", default=[], help="edge-list files")
    bench.add_argument("--er-count", type=int, default=0, help="number of seeded ER instances")
    bench.add_argument("--n", type=int, default=30)
    bench.add_argument("--p", type=float, default=0.2)
    bench.add_argument("--graph-seed", type=int, default=0)
    bench.add_argument("--couplings", nargs="+", default=["cos"])
    bench.add_argument("--mus", nargs="+", type=float, default=[None], help="penalties to compare (default: per coupling)")
    _add_run_options(bench)
    bench.add_argument("--output", help="CSV path")
    bench.set_defaults(handler=cmd_bench)
    return parser


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def cmd_generate(args: argparse.Namespace) -> int:
    graph = graph_controller.generate(args.generator, n=args.n, p=args.p, d=args.d, seed=args.seed)
    if args.output:
        path = Path(args.output)
    else:
        parts = [args.generator] + [f"{k}{v}" for k, v in (("n", args.n), ("p", args.p), ("d", args.d), ("s", args.seed)) if v is not None]
        path = config.init_output_dir() / ("-".join(parts) + ".txt")
    write_graph_file(graph, path)
    print(f"n={graph.n} edges={graph.num_edges} file={path}")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    run = _run_config(args)
    resolve_coupling(run.coupling)
    graph = load_graph(run)
    solution, trajectories = asyncio.run(solve(graph, run))
    write_outputs(solution, trajectories)
    if run.output:
        best = solution.best
        print(
            f"best cut={best.cut} (restart {best.restart}), energy={best.energy_exact:.6g}, "
            f"binarized={best.binarization.all_binarized}"
        )
    else:
        print(solution.model_dump_json(indent=2))
    if all_failed(solution):
        logger.error("every restart ended in step-size underflow")
        return EXIT_RUNTIME
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    graph = load_graph(_graph_only_config(args))
    solution = brute_force_maxcut(graph)
    _print_json({"n": graph.n, "edges": graph.num_edges, **solution.model_dump()})
    return EXIT_OK


def _graph_only_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        graph_file=args.graph,
        generator=args.generator,
        n=args.n,
        p=args.p,
        d=args.d,
        graph_seed=args.graph_seed,
    )


def cmd_ratio(args: argparse.Namespace) -> int:
    coupling, _ = resolve_coupling(args.coupling)
    report = {"coupling": args.coupling, "approximation_ratio": approximation_ratio(coupling)}
    if args.lo is not None or args.hi is not None:
        lo = args.lo if args.lo is not None else 0.0
        hi = args.hi if args.hi is not None else math.pi
        report["interval"] = [lo, hi]
        report["interval_ratio"] = ratio_over_interval(coupling, lo, hi)
    _print_json(report)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    for name in args.couplings:
        resolve_coupling(name)
    instances = bench_controller.file_instances(args.graphs)
    if args.er_count:
        instances += bench_controller.erdos_renyi_instances(args.er_count, args.n, args.p, args.graph_seed)
    if not instances:
        raise ValueError("bench needs --graphs or --er-count")
    base = _run_config(args, graph_file=None, generator=None, n=None, p=None, graph_seed=None, output=None)
    rows = asyncio.run(bench_controller.run_bench(instances, args.couplings, args.mus, base))
    text = write_bench_csv(rows, Path(args.output) if args.output else None)
    sys.stdout.write(text)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.handler(args)
    except (ValueError, OSError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except RuntimeError as e:
        logger.error(str(e))
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
