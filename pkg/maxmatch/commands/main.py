import argparse
import sys
from pathlib import Path
from typing import List, Optional

import pandas as pd

from .. import __version__, logger, set_log_level
from ..config import load_modelcheck_config
from ..config.constants import (
    EXACT_CAP,
    EXIT_CAP_REFUSAL,
    EXIT_CHECK_FAILURE,
    EXIT_INPUT_ERROR,
    EXIT_SUCCESS,
    POINTER_DOMAINS,
)
from ..daemon.engine import Outcome
from ..daemon.strategies import HEURISTICS, STRATEGIES
from ..experiment import (
    FAMILIES,
    ExperimentSpec,
    build_instance,
    content_hash,
    run_experiment,
    sweep,
)
from ..graph import graph_hash
from ..io.export import (
    read_activations,
    write_report,
    write_stats,
    write_table,
    write_trace,
)
from ..model_checker import model_check
from ..utils._errors import CapExceededError, ContractViolationError
from ..utils._logs import add_file_handler, remove_handler


class _ArgumentParser(argparse.ArgumentParser):
    """Parser exiting with the input-error code on invalid arguments."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--output",
        type=Path,
        metavar="DIR",
        help="directory receiving the exported tables, traces and log",
        default=None,
    )
    parser.add_argument(
        "--exact-cap",
        type=int,
        metavar="int",
        help="largest graph given to the exhaustive maximum-matching solver",
        default=EXACT_CAP,
    )
    parser.add_argument("--verbose", help="enable debug logs", action="store_true")


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="maxmatch",
        description="Self-stabilizing 2/3-approximate matching: executions, "
        "sweeps and exhaustive model checks.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    # run ---------------------------------------------------------------------
    run_parser = subparsers.add_parser("run", help="run verified executions")
    run_parser.add_argument(
        "--config", type=Path, metavar="FILE", help="experiment INI file"
    )
    run_parser.add_argument(
        "--generate",
        type=str,
        metavar="SOURCE",
        help="generator spec (e.g. path:4, chain:3) or path to a graph file",
    )
    run_parser.add_argument(
        "--matching", choices=("auto", "greedy", "file"), help="matching source"
    )
    run_parser.add_argument(
        "--init", type=str, help="'clean', 'random' or path to a configuration dump"
    )
    run_parser.add_argument("--strategy", choices=STRATEGIES, help="daemon")
    run_parser.add_argument(
        "--heuristic", choices=tuple(HEURISTICS), help="adversarial heuristic"
    )
    run_parser.add_argument("--seed", type=int, metavar="int", help="first seed")
    run_parser.add_argument(
        "--move-limit", type=int, metavar="int", help="move limit of each execution"
    )
    run_parser.add_argument(
        "--repetitions", type=int, metavar="int", help="number of executions"
    )
    run_parser.add_argument(
        "--replay",
        type=Path,
        metavar="TRACE",
        help="replay the activation sets of an exported trace",
    )
    _add_common(run_parser)

    # sweep -------------------------------------------------------------------
    sweep_parser = subparsers.add_parser("sweep", help="run a parameter grid")
    sweep_parser.add_argument("--family", choices=FAMILIES, default="chain")
    sweep_parser.add_argument(
        "--sizes",
        type=int,
        nargs="*",
        metavar="int",
        help="sizes of the grid (number of matched edges for chains)",
        default=[1, 2, 3],
    )
    sweep_parser.add_argument(
        "--seeds", type=int, metavar="int", help="number of seeds", default=5
    )
    sweep_parser.add_argument(
        "--seed", type=int, metavar="int", help="first seed", default=0
    )
    sweep_parser.add_argument(
        "--strategies",
        choices=STRATEGIES,
        nargs="*",
        default=["sync", "central", "distributed", "adversarial"],
    )
    sweep_parser.add_argument("--init", choices=("clean", "random"), default="random")
    sweep_parser.add_argument(
        "--p", type=float, help="edge probability of random graphs", default=0.3
    )
    sweep_parser.add_argument(
        "--n-jobs", type=int, metavar="int", help="worker processes", default=1
    )
    _add_common(sweep_parser)

    # modelcheck --------------------------------------------------------------
    check_parser = subparsers.add_parser(
        "modelcheck", help="explore every execution of small instances"
    )
    check_parser.add_argument(
        "instances",
        nargs="*",
        help="names from the suite or generator specs, default to the whole suite",
    )
    check_parser.add_argument(
        "--config",
        type=Path,
        metavar="FILE",
        help="model-checking INI file",
        default="modelcheck.ini",
    )
    check_parser.add_argument(
        "--domain",
        choices=POINTER_DOMAINS,
        help="pointer domain of instances given as generator specs",
        default="neighbors",
    )
    check_parser.add_argument(
        "--transition-cap", type=int, metavar="int", help="largest transition count"
    )
    _add_common(check_parser)
    return parser


def _experiment_spec(args: argparse.Namespace) -> ExperimentSpec:
    if args.config is None:
        spec = ExperimentSpec()
    else:
        spec = ExperimentSpec.from_config(args.config)
    overrides = dict(
        graph=args.generate,
        matching=args.matching,
        init=args.init,
        strategy=args.strategy,
        heuristic=args.heuristic,
        seed=args.seed,
        move_limit=args.move_limit,
        repetitions=args.repetitions,
    )
    return spec.replace(**{k: v for k, v in overrides.items() if v is not None})


def _cmd_run(args: argparse.Namespace) -> int:
    spec = _experiment_spec(args)
    activations = None if args.replay is None else read_activations(args.replay)
    try:
        results = run_experiment(spec, activations, args.exact_cap)
    except ContractViolationError as error:
        if activations is None:
            raise
        logger.error("The trace %s can not be replayed: %s", args.replay, error)
        return EXIT_INPUT_ERROR
    code = EXIT_SUCCESS
    for result in results:
        verdict = "pass" if result.report.passed else "fail"
        print(
            f"seed {result.seed}: {result.trace.outcome}, {result.trace.moves} moves "
            f"(bound {result.bounds.total}), {verdict}"
        )
        if result.trace.outcome is not Outcome.STABILIZED or not result.report.passed:
            code = EXIT_CHECK_FAILURE
        if args.output is None:
            continue
        matching = result.trace.initial.matching
        provenance = dict(
            graph_hash=graph_hash(matching.graph, matching),
            seed=result.seed,
            spec_hash=spec.spec_hash,
            version=__version__,
        )
        suffix = "" if len(results) == 1 else f"_seed{result.seed}"
        write_trace(
            result.trace,
            args.output / f"trace{suffix}.jsonl",
            dict(spec=spec.to_json(), spec_hash=spec.spec_hash),
        )
        write_stats(
            result.stats,
            result.bounds,
            result.report,
            args.output / f"stats{suffix}.csv",
            provenance,
        )
        write_table(
            result.stats.to_frame(), args.output / f"nodes{suffix}.csv", provenance
        )
        write_report(result.report, args.output / f"report{suffix}.csv", provenance)
    return code


def _cmd_sweep(args: argparse.Namespace) -> int:
    seeds = list(range(args.seed, args.seed + max(args.seeds, 0)))
    table = sweep(
        args.family,
        args.sizes,
        seeds,
        args.strategies,
        args.init,
        args.p,
        args.exact_cap,
        args.n_jobs,
    )
    with pd.option_context("display.max_rows", None, "display.width", 120):
        print(table.to_string(index=False))
    if args.output is not None:
        grid = dict(
            exact_cap=args.exact_cap,
            family=args.family,
            init=args.init,
            p=args.p,
            seeds=seeds,
            sizes=sorted(args.sizes),
            strategies=sorted(args.strategies),
        )
        provenance = dict(
            family=args.family,
            init=args.init,
            p=args.p,
            seeds=f"{seeds[0]}..{seeds[-1]}",
            sizes=" ".join(str(size) for size in grid["sizes"]),
            spec_hash=content_hash(grid),
            strategies=" ".join(grid["strategies"]),
            version=__version__,
        )
        write_table(table, args.output / "sweep.csv", provenance)
    return EXIT_SUCCESS if bool(table["passed"].all()) else EXIT_CHECK_FAILURE


def _cmd_modelcheck(args: argparse.Namespace) -> int:
    caps, suite = load_modelcheck_config(args.config)
    if args.transition_cap is not None:
        caps["transition_cap"] = args.transition_cap
    if args.exact_cap != EXACT_CAP:
        caps["exact_cap"] = args.exact_cap
    named = {name: (source, domain) for name, source, domain in suite}
    if len(args.instances) == 0:
        instances = [(name, source, domain) for name, source, domain in suite]
    else:
        instances = [
            (name, *named[name]) if name in named else (name, name, args.domain)
            for name in args.instances
        ]
    rows = list()
    for name, source, domain in instances:
        matching = build_instance(source)
        rows.append(
            model_check(
                name,
                matching.graph,
                matching,
                domain,
                caps["transition_cap"],
                caps["exact_cap"],
            )
        )
    table = pd.DataFrame(rows)
    print(table.to_string(index=False))
    if args.output is not None:
        suite_hash = content_hash(
            dict(caps=caps, instances=[list(instance) for instance in instances])
        )
        provenance = dict(spec_hash=suite_hash, version=__version__, **caps)
        write_table(table, args.output / "modelcheck.csv", provenance)
    if (table["verdict"] == "pass").all():
        return EXIT_SUCCESS
    return EXIT_CHECK_FAILURE


_COMMANDS = dict(run=_cmd_run, sweep=_cmd_sweep, modelcheck=_cmd_modelcheck)


def main(argv: Optional[List[str]] = None) -> int:
    """Parse the arguments, execute a sub-command and return the exit code.

    Parameters
    ----------
    argv : list of str | None
        Command-line arguments, by default sys.argv[1:].

    Returns
    -------
    code : int
        0 on success, 2 on a failed check or an exceeded move limit, 3 on an
        input error and 4 when an instance is refused by a size cap.
    """
    args = _build_parser().parse_args(argv)
    set_log_level("DEBUG" if args.verbose else "INFO")
    handler = None
    try:
        if args.output is not None:
            args.output.mkdir(parents=True, exist_ok=True)
            handler = add_file_handler(args.output / "maxmatch.log", mode="w")
        return _COMMANDS[args.command](args)
    except CapExceededError as error:
        logger.error("%s", error)
        return EXIT_CAP_REFUSAL
    except ContractViolationError as error:
        logger.error("%s", error)
        return EXIT_CHECK_FAILURE
    except (ValueError, TypeError, FileNotFoundError, KeyError) as error:
        logger.error("%s", error)
        return EXIT_INPUT_ERROR
    finally:
        if handler is not None:
            remove_handler(handler)


def run():
    """Entrypoint for maxmatch <command> usage."""
    sys.exit(main())
