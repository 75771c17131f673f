"""Experiment specifications, verified executions and parameter sweeps."""

import hashlib
import json
import multiprocessing as mp
from configparser import ConfigParser
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import (
    Dict,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import pandas as pd

from .config.config import load_experiment_config
from .config.constants import EXACT_CAP
from .daemon.bounds import MoveBounds, check_move_bounds, theoretical_bounds
from .daemon.engine import MoveStats, Outcome, Trace, run, verify_trace
from .daemon.strategies import HEURISTICS, STRATEGIES, Replay, make_strategy
from .graph import (
    Graph,
    Matching,
    generate,
    generate_augmenting_chain,
    greedy_maximal_matching,
)
from .io.configuration import parse_configuration
from .io.graph import read_graph
from .oracle.report import VerificationReport
from .oracle.structure import (
    check_stop_persistence,
    verify_approximation,
    verify_stable_structure,
)
from .protocol.state import Configuration, clean_configuration, random_configuration
from .utils._checks import _check_count, _check_seed, _check_type, _check_value
from .utils._docs import fill_doc
from .utils._logs import logger

FAMILIES = ("path", "cycle", "random", "complete_bipartite", "chain")
SWEEP_COLUMNS = (
    "family",
    "size",
    "n",
    "seed",
    "strategy",
    "init",
    "outcome",
    "moves",
    "bound",
    "moves_per_n3",
    "passed",
    "failures",
)


def content_hash(fields: Mapping[str, object]) -> str:
    """Short SHA-256 digest of the canonical JSON serialization of a mapping."""
    text = json.dumps(fields, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class ExperimentSpec:
    """Fully serializable description of a batch of executions.

    Parameters
    ----------
    graph : str
        Generator spec (``'path:4'``, ``'cycle:6'``, ``'random:10:0.3'``,
        ``'complete_bipartite:6:2'``, ``'chain:3'``, ``'chain:3:descending'``)
        or path to a graph file.
    matching : str
        ``'auto'``, ``'greedy'`` or ``'file'``. ``'auto'`` keeps the matching
        of a graph file or of a chain, and builds a greedy one otherwise.
    init : str
        ``'clean'``, ``'random'`` or path to a configuration dump.
    strategy : str
        Name of the daemon.
    heuristic : str
        Heuristic of the ``'adversarial'`` daemon.
    seed : int
        Seed of the first execution.
    move_limit : int | None
        Move limit, None for the total-move bound plus one.
    repetitions : int
        Number of executions, with seeds seed, seed + 1, ...
    """

    graph: str = "path:4"
    matching: str = "auto"
    init: str = "clean"
    strategy: str = "sync"
    heuristic: str = "flip"
    seed: int = 0
    move_limit: Optional[int] = None
    repetitions: int = 1

    def __post_init__(self):
        _check_type(self.graph, (str,), "graph")
        _check_value(self.matching, ("auto", "greedy", "file"), "matching")
        _check_type(self.init, (str,), "init")
        _check_value(self.strategy, STRATEGIES, "strategy")
        _check_value(self.heuristic, HEURISTICS, "heuristic")
        _check_seed(self.seed)
        if self.move_limit is not None:
            _check_count(self.move_limit, "move_limit")
        _check_count(self.repetitions, "repetitions")

    @classmethod
    def from_config(cls, fname: Union[str, Path]) -> "ExperimentSpec":
        """Create a spec from the [experiment] section of an INI file."""
        return cls(**load_experiment_config(fname))

    def to_config(self, fname: Union[str, Path]) -> None:
        """Write the spec as the [experiment] section of an INI file."""
        config = ConfigParser()
        config.optionxform = str
        config["experiment"] = {
            key: "none" if value is None else str(value)
            for key, value in asdict(self).items()
        }
        with open(fname, "w", encoding="utf-8") as file:
            config.write(file)

    def to_json(self) -> str:
        """Canonical JSON serialization, keys sorted."""
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @property
    def spec_hash(self) -> str:
        """Short SHA-256 digest of the canonical serialization."""
        return content_hash(asdict(self))

    @property
    def seeds(self) -> List[int]:
        """Seed of each repetition."""
        return list(range(self.seed, self.seed + self.repetitions))

    def replace(self, **kwargs) -> "ExperimentSpec":
        """Copy of the spec with some fields replaced."""
        return replace(self, **kwargs)


class ExecutionResult(NamedTuple):
    """A verified execution."""

    seed: int
    trace: Trace
    stats: MoveStats
    bounds: MoveBounds
    report: VerificationReport


def _chain_order(fields: List[str]) -> str:
    if len(fields) == 2:
        return "ascending"
    if len(fields) == 3 and fields[2] in ("ascending", "descending"):
        return fields[2]
    raise ValueError(f"Invalid chain source '{':'.join(fields)}'.")


def parse_graph_source(
    source: str, seed: int = 0
) -> Tuple[Graph, Optional[Matching]]:
    """Build the graph described by a generator spec or read it from a file.

    Parameters
    ----------
    source : str
        Generator spec or path to a graph file, see ExperimentSpec.
    seed : int
        Seed of the ``'random'`` generator.

    Returns
    -------
    graph : Graph
        The graph.
    matching : Matching | None
        The matching of a graph file or of a chain, None for the other
        generators.
    """
    _check_type(source, (str,), "source")
    fields = source.split(":")
    kind = fields[0]
    if kind not in FAMILIES:
        if Path(source).exists():
            return read_graph(source)
        raise ValueError(
            f"The graph source '{source}' is neither a generator spec of "
            f"{FAMILIES} nor an existing file."
        )
    if len(fields) < 2:
        raise ValueError(f"The graph source '{source}' is missing its size.")
    try:
        size = int(fields[1])
    except ValueError:
        raise ValueError(f"The size of the graph source '{source}' is not an int.")
    if kind == "chain":
        return generate_augmenting_chain(size, _chain_order(fields))
    if kind == "random":
        if len(fields) != 3:
            raise ValueError(f"Expected 'random:n:p', got '{source}'.")
        return generate("random", size, p=float(fields[2]), seed=seed), None
    if kind == "complete_bipartite":
        if len(fields) not in (2, 3):
            raise ValueError(
                f"Expected 'complete_bipartite:n[:left]', got '{source}'."
            )
        n_left = int(fields[2]) if len(fields) == 3 else None
        return generate(kind, size, n_left=n_left), None
    if len(fields) != 2:
        raise ValueError(f"Expected '{kind}:n', got '{source}'.")
    return generate(kind, size), None


def build_instance(source: str, matching: str = "auto", seed: int = 0) -> Matching:
    """Graph and underlying matching of an experiment.

    Parameters
    ----------
    source : str
        Generator spec or path to a graph file.
    matching : str
        ``'auto'``, ``'greedy'`` or ``'file'``.
    seed : int
        Seed of the ``'random'`` generator.

    Returns
    -------
    matching : Matching
        The underlying matching, bound to its graph.
    """
    _check_value(matching, ("auto", "greedy", "file"), "matching")
    graph, provided = parse_graph_source(source, seed)
    if matching == "file":
        if source.split(":")[0] in FAMILIES:
            raise ValueError(
                f"A 'file' matching requires a graph file, got '{source}'."
            )
        return provided
    if matching == "auto" and provided is not None:
        return provided
    return greedy_maximal_matching(graph)


def build_initial(init: str, matching: Matching, seed: int = 0) -> Configuration:
    """Initial configuration: clean, seeded random, or read from a dump."""
    _check_type(init, (str,), "init")
    if init == "clean":
        return clean_configuration(matching)
    if init == "random":
        return random_configuration(matching, seed)
    if not Path(init).exists():
        raise FileNotFoundError(
            f"The initial configuration '{init}' is neither 'clean', 'random' "
            "nor an existing file."
        )
    with open(init, encoding="utf-8") as file:
        return parse_configuration(file.read(), matching)


@fill_doc
def verify_execution(
    trace: Trace,
    stats: MoveStats,
    bounds: MoveBounds,
    exact_cap: int = EXACT_CAP,
) -> VerificationReport:
    """Run every check on a recorded execution.

    Parameters
    ----------
    %(trace)s
    %(stats)s
    %(bounds)s
    %(exact_cap)s

    Returns
    -------
    %(report_return)s
    """
    report = VerificationReport()
    stabilized = trace.outcome is Outcome.STABILIZED
    report.add(
        "stabilized",
        stabilized,
        f"{trace.moves} moves in {len(trace)} transitions, limit "
        f"{trace.header['move_limit']}",
    )
    report.extend(verify_trace(trace))
    report.extend(check_move_bounds(stats, bounds))
    report.extend(check_stop_persistence(trace))
    if stabilized:
        report.extend(verify_stable_structure(trace.final))
        report.extend(verify_approximation(trace.final, exact_cap=exact_cap))
    return report


def run_experiment(
    spec: ExperimentSpec,
    activations: Optional[Sequence[Sequence[int]]] = None,
    exact_cap: int = EXACT_CAP,
) -> List[ExecutionResult]:
    """Run and verify every repetition of an experiment.

    Parameters
    ----------
    spec : ExperimentSpec
        The experiment.
    activations : list of list of int | None
        Activation sets to replay instead of the daemon of the spec. Only
        valid for a single repetition.
    exact_cap : int
        Largest number of nodes for which the exhaustive maximum-matching
        solver is run.

    Returns
    -------
    results : list of ExecutionResult
        One verified execution per repetition.
    """
    _check_type(spec, (ExperimentSpec,), "spec")
    if activations is not None and spec.repetitions != 1:
        raise ValueError("A replay requires a single repetition.")
    results = list()
    for seed in spec.seeds:
        matching = build_instance(spec.graph, spec.matching, seed)
        initial = build_initial(spec.init, matching, seed)
        if activations is None:
            strategy = make_strategy(spec.strategy, spec.heuristic)
        else:
            strategy = Replay(activations)
        trace, stats = run(initial, strategy, spec.move_limit, seed)
        bounds = theoretical_bounds(matching.graph, matching)
        report = verify_execution(trace, stats, bounds, exact_cap)
        for check in report.failures:
            logger.error(
                "Check '%s' failed (seed %i): %s", check.name, seed, check.witness
            )
        results.append(ExecutionResult(seed, trace, stats, bounds, report))
    return results


def _cell_source(family: str, size: int, p: float) -> str:
    if family == "random":
        return f"random:{size}:{p}"
    return f"{family}:{size}"


def _run_cell(args: Tuple[str, int, int, str, str, float, int]) -> Dict[str, object]:
    family, size, seed, strategy, init, p, exact_cap = args
    spec = ExperimentSpec(
        graph=_cell_source(family, size, p), init=init, strategy=strategy, seed=seed
    )
    (result,) = run_experiment(spec, exact_cap=exact_cap)
    n = result.trace.initial.graph.n_nodes
    return dict(
        family=family,
        size=size,
        n=n,
        seed=seed,
        strategy=strategy,
        init=init,
        outcome=str(result.trace.outcome),
        moves=result.trace.moves,
        bound=result.bounds.total,
        moves_per_n3=result.trace.moves / n**3,
        passed=result.report.passed,
        failures=";".join(check.name for check in result.report.failures),
    )


def sweep(
    family: str,
    sizes: Sequence[int],
    seeds: Sequence[int],
    strategies: Sequence[str],
    init: str = "random",
    p: float = 0.3,
    exact_cap: int = EXACT_CAP,
    n_jobs: int = 1,
) -> pd.DataFrame:
    """Run one verified execution per cell of a parameter grid.

    Parameters
    ----------
    family : str
        One of 'path', 'cycle', 'random', 'complete_bipartite' and 'chain'.
        The size is the number of nodes, or the number of matched edges of a
        chain.
    sizes : list of int
        Sizes of the grid.
    seeds : list of int
        Seeds of the grid.
    strategies : list of str
        Daemons of the grid.
    init : str
        ``'clean'`` or ``'random'``.
    p : float
        Edge probability of the 'random' family.
    exact_cap : int
        Largest number of nodes for which the exhaustive maximum-matching
        solver is run.
    n_jobs : int
        Number of worker processes.

    Returns
    -------
    table : DataFrame
        One row per cell, sorted by family, size, seed and strategy, with
        the columns family, size, n, seed, strategy, init, outcome, moves,
        bound, moves_per_n3, passed and failures.
    """
    _check_value(family, FAMILIES, "family")
    _check_value(init, ("clean", "random"), "init")
    for strategy in strategies:
        _check_value(strategy, STRATEGIES, "strategy")
    n_jobs = _check_count(n_jobs, "n_jobs")
    cells = [
        (family, int(size), int(seed), strategy, init, p, exact_cap)
        for size in sizes
        for seed in seeds
        for strategy in strategies
    ]
    if len(cells) == 0:
        raise ValueError("The sweep grid is empty.")
    logger.info("Sweep over %i cells with %i worker(s).", len(cells), n_jobs)
    if n_jobs == 1:
        rows = [_run_cell(cell) for cell in cells]
    else:
        with mp.Pool(processes=n_jobs) as pool:
            rows = pool.map(_run_cell, cells)
    table = pd.DataFrame(rows, columns=SWEEP_COLUMNS)
    return table.sort_values(["family", "size", "seed", "strategy"]).reset_index(
        drop=True
    )
