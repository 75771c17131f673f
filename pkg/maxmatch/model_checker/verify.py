"""Silence, closure and move-bound verdicts over an explored state space."""

from typing import Dict, List, NamedTuple, Optional

import numpy as np

from ..config.constants import EXACT_CAP, TRANSITION_CAP
from ..daemon.bounds import theoretical_bounds
from ..graph import Graph, Matching
from ..io.configuration import dump_configuration
from ..oracle.report import VerificationReport
from ..oracle.structure import verify_approximation, verify_stable_structure
from ..protocol.rules import is_stable
from ..utils._checks import _check_type
from ..utils._docs import fill_doc
from ..utils._logs import logger, verbose
from .explore import StateSpace, explore


class Analysis(NamedTuple):
    """Acyclicity and longest execution of a state space.

    Attributes
    ----------
    acyclic : bool
        True if no execution cycles.
    longest_moves : int | None
        Largest number of moves of an execution, None if a cycle exists.
    cycle : list of int
        Configuration indices of a cycle, empty if acyclic.
    """

    acyclic: bool
    longest_moves: Optional[int]
    cycle: List[int]


def _edge_indices(offsets: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Transition indices of the rows, concatenated."""
    starts, stops = offsets[rows], offsets[rows + 1]
    lengths = stops - starts
    total = int(lengths.sum())
    if total == 0:
        return np.zeros(0, dtype=np.int64)
    shift = np.repeat(starts - np.cumsum(lengths) + lengths, lengths)
    return np.arange(total, dtype=np.int64) + shift


def _find_cycle(space: StateSpace, remaining: np.ndarray) -> List[int]:
    """Cycle among the configurations left over by the topological sort."""
    # 0 new, 1 on the path, 2 done
    color = np.zeros(space.n_configurations, dtype=np.uint8)
    for root in np.flatnonzero(remaining):
        if color[root] != 0:
            continue
        path, stack = [int(root)], [iter(space.successors(int(root))[0])]
        color[root] = 1
        while stack:
            successor = next(stack[-1], None)
            if successor is None:
                color[path.pop()] = 2
                stack.pop()
                continue
            successor = int(successor)
            if not remaining[successor] or color[successor] == 2:
                continue
            if color[successor] == 1:
                return path[path.index(successor) :]
            color[successor] = 1
            path.append(successor)
            stack.append(iter(space.successors(successor)[0]))
    return list()


def analyze(space: StateSpace) -> Analysis:
    """Check acyclicity and compute the longest moves-weighted execution.

    A level-synchronous topological sort peels the configurations without
    remaining predecessors. If it peels every configuration, the transition
    relation is acyclic and the longest execution is computed from the sinks
    backwards, level by level. The result is cached on the space.

    Parameters
    ----------
    space : StateSpace
        The explored state space.

    Returns
    -------
    analysis : Analysis
        The acyclicity verdict, the longest execution and a witness cycle.
    """
    if space._analysis is not None:
        return space._analysis
    n = space.n_configurations
    offsets, targets, weights = space.offsets, space.targets, space.weights
    indegree = np.bincount(targets, minlength=n).astype(np.int64)
    frontier = np.flatnonzero(indegree == 0)
    levels = list()
    peeled = 0
    while frontier.size != 0:
        levels.append(frontier)
        peeled += frontier.size
        edges = _edge_indices(offsets, frontier)
        released = np.bincount(targets[edges], minlength=n)
        indegree -= released
        frontier = np.flatnonzero((indegree == 0) & (released > 0))
    if peeled != n:
        remaining = np.ones(n, dtype=bool)
        for level in levels:
            remaining[level] = False
        space._analysis = Analysis(False, None, _find_cycle(space, remaining))
        return space._analysis
    longest = np.zeros(n, dtype=np.int64)
    for level in reversed(levels):
        edges = _edge_indices(offsets, level)
        if edges.size == 0:
            continue
        sources = np.repeat(level, offsets[level + 1] - offsets[level])
        candidate = weights[edges].astype(np.int64) + longest[targets[edges]]
        np.maximum.at(longest, sources, candidate)
    space._analysis = Analysis(True, int(longest.max(initial=0)), list())
    return space._analysis


def _dump_inline(space: StateSpace, index: int) -> str:
    return "; ".join(dump_configuration(space.configuration(index)).splitlines())


@fill_doc
@verbose
def verify_silence_and_closure(
    space: StateSpace,
    exact_cap: int = EXACT_CAP,
    *,
    verbose: Optional[bool] = None,
) -> VerificationReport:
    """Check that every execution of a state space is finite and ends well.

    Parameters
    ----------
    space : StateSpace
        The explored state space.
    %(exact_cap)s
    %(verbose)s

    Returns
    -------
    %(report_return)s
    """
    _check_type(space, (StateSpace,), "space")
    report = VerificationReport()
    matching = space.matching
    graph = matching.graph

    expected = np.left_shift(1, space.n_eligible.astype(np.int64)) - 1
    incomplete = np.flatnonzero(np.diff(space.offsets) != expected)
    report.add(
        "subset_completeness",
        incomplete.size == 0,
        f"configurations {incomplete[:5].tolist()}"
        if incomplete.size
        else f"{space.n_transitions} transitions",
    )

    analysis = analyze(space)
    report.add(
        "acyclic",
        analysis.acyclic,
        " | ".join(_dump_inline(space, k) for k in analysis.cycle[:4])
        if not analysis.acyclic
        else f"{space.n_configurations} configurations",
    )

    stable = space.stable
    not_stable, structure, approximation = list(), list(), list()
    for index in stable:
        configuration = space.configuration(int(index))
        if not is_stable(configuration):
            not_stable.append(int(index))
            continue
        if not verify_stable_structure(configuration).passed:
            structure.append(int(index))
        if not verify_approximation(configuration, graph, exact_cap).passed:
            approximation.append(int(index))
    report.add(
        "sinks_stable",
        len(not_stable) == 0,
        f"{stable.size} sinks"
        if not not_stable
        else _dump_inline(space, not_stable[0]),
    )
    report.add(
        "stable_structure",
        len(structure) == 0,
        f"{stable.size} stable configurations"
        if not structure
        else _dump_inline(space, structure[0]),
    )
    report.add(
        "stable_approximation",
        len(approximation) == 0,
        f"{stable.size} stable configurations"
        if not approximation
        else _dump_inline(space, approximation[0]),
    )

    bound = theoretical_bounds(graph, matching).total
    if analysis.acyclic:
        report.add(
            "longest_execution",
            analysis.longest_moves <= bound,
            f"{analysis.longest_moves} moves, bound {bound}",
        )
    else:
        report.skip("longest_execution", "the transition relation has a cycle")
    for check in report.failures:
        logger.error("Model check '%s' failed: %s", check.name, check.witness)
    return report


@fill_doc
def model_check(
    name: str,
    graph: Graph,
    matching: Matching,
    pointer_domain: str = "neighbors",
    transition_cap: int = TRANSITION_CAP,
    exact_cap: int = EXACT_CAP,
) -> Dict[str, object]:
    """Explore every initial configuration of an instance and verify it.

    Parameters
    ----------
    name : str
        Name of the instance, reported in the summary.
    %(graph)s
    %(matching)s
    %(pointer_domain)s
    %(transition_cap)s
    %(exact_cap)s

    Returns
    -------
    summary : dict
        instance, domain, configurations, transitions, stable, longest_moves,
        bound, verdict and the failed checks.
    """
    space = explore(graph, matching, None, pointer_domain, transition_cap)
    report = verify_silence_and_closure(space, exact_cap)
    analysis = analyze(space)
    verdict = "pass" if report.passed else "fail"
    logger.info(
        "Instance %s: %s, longest execution %s moves.",
        name,
        verdict,
        analysis.longest_moves,
    )
    return dict(
        instance=name,
        domain=pointer_domain,
        configurations=space.n_configurations,
        transitions=space.n_transitions,
        stable=int(space.stable.size),
        longest_moves=analysis.longest_moves,
        bound=theoretical_bounds(graph, matching).total,
        verdict=verdict,
        failures=";".join(check.name for check in report.failures),
    )
