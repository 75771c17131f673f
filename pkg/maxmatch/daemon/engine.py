"""Execution of the protocol under a daemon, traces and move counters."""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Tuple

import numpy as np
import pandas as pd

from .._version import __version__
from ..graph import Matching, graph_hash
from ..oracle.report import VerificationReport
from ..protocol.rules import enabled_nodes, enabled_rule, is_stable, step
from ..protocol.state import (
    Configuration,
    MatchedState,
    NodeState,
    RuleId,
)
from ..utils._checks import _check_count, _check_seed, _check_type
from ..utils._docs import fill_doc
from ..utils._logs import logger, verbose
from .bounds import theoretical_bounds
from .strategies import DaemonStrategy, select


class Outcome(str, Enum):
    """How an execution ended."""

    STABILIZED = "Stabilized"
    LIMIT_EXCEEDED = "LimitExceeded"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TraceStep:
    """One transition of an execution.

    Attributes
    ----------
    index : int
        Index of the transition, starting at 0.
    activations : dict
        Mapping activated node -> executed rule, in ascending node order.
    configuration : Configuration
        The configuration reached by the transition.
    moves : int
        Cumulative number of moves, this transition included.
    """

    index: int
    activations: Mapping[int, RuleId]
    configuration: Configuration
    moves: int


class Trace:
    """Recorded execution C_0, A_0, C_1, A_1, ...

    Parameters
    ----------
    initial : Configuration
        The initial configuration.
    steps : list of TraceStep
        The transitions.
    outcome : Outcome
        How the execution ended.
    header : dict
        Provenance: graph hash, strategy, seed, move limit and version.
    """

    def __init__(
        self,
        initial: Configuration,
        steps: List[TraceStep],
        outcome: Outcome,
        header: Dict[str, Any],
    ):
        self.initial = initial
        self.steps = steps
        self.outcome = Outcome(outcome)
        self.header = header

    def __repr__(self) -> str:
        return (
            f"<Trace | {len(self.steps)} transitions, {self.moves} moves, "
            f"{self.outcome}>"
        )

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def configurations(self) -> List[Configuration]:
        """C_0, C_1, ..., the final configuration included."""
        return [self.initial] + [elt.configuration for elt in self.steps]

    @property
    def final(self) -> Configuration:
        """The last configuration."""
        return self.steps[-1].configuration if self.steps else self.initial

    @property
    def moves(self) -> int:
        """Total number of moves."""
        return self.steps[-1].moves if self.steps else 0


class MoveStats:
    """Per-node and per-rule move counters.

    Parameters
    ----------
    %(matching)s
    """

    def __init__(self, matching: Matching):
        self.matching = matching
        self.counts: Counter = Counter()  # (node, rule) -> moves
        matched = sorted(matching.roles.matched)
        single = sorted(matching.roles.single)
        self.end_true_writes: Dict[int, int] = {u: 0 for u in matched}
        self.copies_true: Dict[int, int] = {u: 0 for u in matched}
        self.end_flips: Dict[int, int] = {x: 0 for x in single}
        self.single_true_writes = 0
        self.total_moves = 0

    def __repr__(self) -> str:
        return f"<MoveStats | {self.total_moves} moves>"

    def record(
        self, before: Configuration, u: int, rule: RuleId, state: NodeState
    ) -> None:
        """Count the move of u executing rule from the configuration before.

        Parameters
        ----------
        before : Configuration
            The configuration the transition starts from.
        u : int
            The moving node.
        rule : RuleId
            The executed rule.
        state : SingleState | MatchedState
            The new state of u.
        """
        self.counts[(u, RuleId(rule))] += 1
        self.total_moves += 1
        if isinstance(state, MatchedState):
            if rule in (RuleId.MATCH_FIRST, RuleId.MATCH_SECOND) and state.end:
                self.end_true_writes[u] += 1
            return
        old = before[u]
        if state.end != old.end:
            self.end_flips[u] += 1
        if state.end and not old.end:
            self.single_true_writes += 1
            # only UpdateEnd writes True, copying it from the pointed node
            self.copies_true[old.p] += 1

    def rule_totals(self) -> Counter:
        """Mapping rule -> number of moves, 0 for rules never executed."""
        totals = Counter({rule: 0 for rule in RuleId})
        for (_, rule), n in self.counts.items():
            totals[rule] += n
        return totals

    def per_node(self, rule: RuleId) -> Dict[int, int]:
        """Mapping node -> moves executing rule, over the nodes of its role."""
        roles = self.matching.roles
        role = roles.single if rule.role == "single" else roles.matched
        return {u: self.counts[(u, rule)] for u in sorted(role)}

    @property
    def matched_moves(self) -> int:
        """Total moves of matched nodes."""
        return sum(n for (_, rule), n in self.counts.items() if rule.role == "matched")

    def to_frame(self) -> pd.DataFrame:
        """One row per node with its per-rule counts and end counters."""
        rows = list()
        for u in self.matching.graph.nodes:
            matched = self.matching.is_matched(u)
            row = dict(node=u, role="matched" if matched else "single")
            for rule in RuleId:
                row[rule.value] = self.counts[(u, rule)]
            row["end_true_writes"] = self.end_true_writes.get(u, 0)
            row["copies_true"] = self.copies_true.get(u, 0)
            row["end_flips"] = self.end_flips.get(u, 0)
            row["moves"] = sum(row[rule.value] for rule in RuleId)
            rows.append(row)
        return pd.DataFrame(rows)


fill_doc(MoveStats)


@fill_doc
@verbose
def run(
    initial: Configuration,
    strategy: DaemonStrategy,
    move_limit: Optional[int] = None,
    seed: Optional[int] = None,
    *,
    verbose: Optional[bool] = None,
) -> Tuple[Trace, MoveStats]:
    """Execute the protocol until it stabilizes or exceeds a move limit.

    Each transition activates the nodes chosen by the daemon, one move per
    activated node. The limit is checked after each transition and takes
    precedence: a transition reaching a stable configuration with a move count
    above the limit ends the execution as LimitExceeded.

    Parameters
    ----------
    initial : Configuration
        The initial configuration.
    %(strategy)s
    %(move_limit)s
    %(seed)s
    %(verbose)s

    Returns
    -------
    %(trace)s
    %(stats)s
    """
    _check_type(initial, (Configuration,), "initial")
    _check_type(strategy, (DaemonStrategy,), "strategy")
    matching = initial.matching
    if move_limit is None:
        move_limit = theoretical_bounds(matching.graph, matching).total + 1
    move_limit = _check_count(move_limit, "move_limit")
    seed = _check_seed(seed)
    rng = np.random.default_rng(seed)
    strategy.reset()

    stats = MoveStats(matching)
    steps: List[TraceStep] = list()
    configuration = initial
    outcome = Outcome.STABILIZED
    logger.info(
        "Execution with %s on %r, seed %i, move limit %i.",
        strategy.name,
        matching.graph,
        seed,
        move_limit,
    )
    while not is_stable(configuration):
        eligible = enabled_nodes(configuration)
        active = select(strategy, configuration, rng)
        activations = {u: eligible[u] for u in sorted(active)}
        successor = step(configuration, active)
        for u, rule in activations.items():
            stats.record(configuration, u, rule, successor[u])
        steps.append(TraceStep(len(steps), activations, successor, stats.total_moves))
        logger.debug(
            "Transition %i: %s",
            len(steps) - 1,
            ", ".join(f"{u}:{rule}" for u, rule in activations.items()),
        )
        configuration = successor
        if stats.total_moves > move_limit:
            outcome = Outcome.LIMIT_EXCEEDED
            break

    header = dict(
        graph_hash=graph_hash(matching.graph, matching),
        move_limit=move_limit,
        seed=seed,
        version=__version__,
        **strategy.describe(),
    )
    logger.info(
        "%s after %i transitions and %i moves.", outcome, len(steps), stats.total_moves
    )
    return Trace(initial, steps, outcome, header), stats


@fill_doc
def verify_trace(trace: Trace) -> VerificationReport:
    """Check that a trace is a well-formed execution.

    Parameters
    ----------
    %(trace)s

    Returns
    -------
    %(report_return)s
    """
    _check_type(trace, (Trace,), "trace")
    report = VerificationReport()
    wrong_rule, wrong_successor, wrong_count = list(), list(), list()
    previous, moves = trace.initial, 0
    for elt in trace.steps:
        for u, rule in elt.activations.items():
            if enabled_rule(previous, u) != rule:
                wrong_rule.append((elt.index, u))
        valid = len(elt.activations) != 0 and all(
            enabled_rule(previous, u) is not None for u in elt.activations
        )
        if not valid or step(previous, elt.activations) != elt.configuration:
            wrong_successor.append(elt.index)
        moves += len(elt.activations)
        if moves != elt.moves:
            wrong_count.append(elt.index)
        previous = elt.configuration
    report.add(
        "trace_rules",
        len(wrong_rule) == 0,
        f"(transition, node) {wrong_rule[:5]}" if wrong_rule else "",
    )
    report.add(
        "trace_successors",
        len(wrong_successor) == 0,
        f"transitions {wrong_successor[:5]}" if wrong_successor else "",
    )
    report.add(
        "trace_move_count",
        len(wrong_count) == 0,
        f"transitions {wrong_count[:5]}" if wrong_count else f"{moves} moves",
    )
    if trace.outcome is Outcome.STABILIZED:
        consistent = is_stable(trace.final)
    else:
        consistent = trace.moves > trace.header.get("move_limit", trace.moves - 1)
    report.add("trace_outcome", consistent, str(trace.outcome))
    return report
