"""Per-node protocol variables, rule identifiers and configurations."""

from enum import Enum
from typing import (
    Iterator,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np

from ..config.constants import FOREIGN_RATE
from ..graph import Graph, Matching
from ..utils._checks import _check_probability, _check_seed, _check_type
from ..utils._docs import fill_doc


class SingleState(NamedTuple):
    """Variables of a single node: one pointer and one boolean."""

    p: Optional[int]
    end: bool


class MatchedState(NamedTuple):
    """Variables of a matched node: three pointers and two booleans."""

    p: Optional[int]
    alpha: Optional[int]
    beta: Optional[int]
    s: bool
    end: bool


NodeState = Union[SingleState, MatchedState]


class RuleId(str, Enum):
    """Guarded rules, listed from the strongest priority within each role."""

    RESET_END = "ResetEnd"
    UPDATE_P = "UpdateP"
    UPDATE_END = "UpdateEnd"
    UPDATE = "Update"
    MATCH_FIRST = "MatchFirst"
    MATCH_SECOND = "MatchSecond"
    RESET_MATCH = "ResetMatch"

    @property
    def role(self) -> str:
        """'single' or 'matched'."""
        return "single" if self in _SINGLE_RULES else "matched"

    @property
    def priority(self) -> int:
        """Priority of the rule within its role, 1 is the strongest."""
        rules = _SINGLE_RULES if self in _SINGLE_RULES else _MATCHED_RULES
        return rules.index(self) + 1

    def __str__(self) -> str:
        return self.value


_SINGLE_RULES = (RuleId.RESET_END, RuleId.UPDATE_P, RuleId.UPDATE_END)
_MATCHED_RULES = (
    RuleId.UPDATE,
    RuleId.MATCH_FIRST,
    RuleId.MATCH_SECOND,
    RuleId.RESET_MATCH,
)


class Configuration:
    """Immutable snapshot of the variables of every node.

    Parameters
    ----------
    %(matching)s
    states : dict | sequence
        Mapping node -> state, or a sequence of states aligned with
        ``matching.graph.nodes``. Single nodes hold a SingleState and matched
        nodes a MatchedState. Pointers may hold any node identifier or None.
    """

    __slots__ = ("_matching", "_states", "_moves")

    def __init__(
        self,
        matching: Matching,
        states: Union[Mapping[int, NodeState], Sequence[NodeState]],
    ):
        _check_type(matching, (Matching,), "matching")
        graph = matching.graph
        if isinstance(states, Mapping):
            missing = sorted(set(graph.nodes) - set(states))
            extra = sorted(set(states) - set(graph.nodes))
            if len(missing) != 0 or len(extra) != 0:
                raise ValueError(
                    "The states must cover exactly the nodes of the graph. "
                    f"Missing: {missing}, unknown: {extra}."
                )
            states = tuple(states[u] for u in graph.nodes)
        else:
            states = tuple(states)
            if len(states) != graph.n_nodes:
                raise ValueError(
                    f"Expected {graph.n_nodes} states, one per node, got "
                    f"{len(states)}."
                )
        for u, state in zip(graph.nodes, states):
            _check_state(graph, matching, u, state)
        self._matching = matching
        self._states = states
        self._moves = None

    @classmethod
    def _from_states(cls, matching: Matching, states: Tuple[NodeState, ...]):
        """Build a configuration from already validated states."""
        self = cls.__new__(cls)
        self._matching = matching
        self._states = states
        self._moves = None
        return self

    def __getitem__(self, u: int) -> NodeState:
        return self._states[self._matching.graph.index(u)]

    def __iter__(self) -> Iterator[int]:
        return iter(self._matching.graph.nodes)

    def __len__(self) -> int:
        return len(self._states)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self._states == other._states and self._matching == other._matching

    def __hash__(self) -> int:
        return hash(self._states)

    def __repr__(self) -> str:
        return f"<Configuration | {len(self._states)} nodes>"

    def items(self) -> Iterator[Tuple[int, NodeState]]:
        """Iterate over (node, state) pairs in ascending node order."""
        return zip(self._matching.graph.nodes, self._states)

    def replace(self, updates: Mapping[int, NodeState]) -> "Configuration":
        """Return a new configuration with some node states replaced.

        Parameters
        ----------
        updates : dict
            Mapping node -> new state.

        Returns
        -------
        %(configuration)s
        """
        graph = self._matching.graph
        states = list(self._states)
        for u, state in updates.items():
            if u not in graph:
                raise ValueError(f"Node {u} is not part of the graph.")
            _check_state(graph, self._matching, u, state)
            states[graph.index(u)] = state
        return Configuration._from_states(self._matching, tuple(states))

    @property
    def graph(self) -> Graph:
        """The graph of the underlying matching."""
        return self._matching.graph

    @property
    def matching(self) -> Matching:
        """The fixed underlying matching."""
        return self._matching

    @property
    def states(self) -> Tuple[NodeState, ...]:
        """States aligned with the ascending order of the nodes."""
        return self._states


fill_doc(Configuration)
fill_doc(Configuration.replace)


def _check_state(graph: Graph, matching: Matching, u: int, state) -> None:
    """Check that a state record fits the role of u and points inside V."""
    expected = MatchedState if matching.is_matched(u) else SingleState
    if not isinstance(state, expected):
        raise ValueError(
            f"Node {u} is {'matched' if expected is MatchedState else 'single'} "
            f"and requires a {expected.__name__}, got {state!r}."
        )
    for field in state._fields:
        value = getattr(state, field)
        if field in ("s", "end"):
            if not isinstance(value, (bool, np.bool_)):
                raise ValueError(
                    f"Variable '{field}' of node {u} must be a boolean, got {value!r}."
                )
        elif value is not None and value not in graph:
            raise ValueError(
                f"Pointer '{field}' of node {u} must be a node identifier or None, "
                f"got {value!r}."
            )


@fill_doc
def clean_configuration(matching: Matching) -> Configuration:
    """All pointers null and all booleans False.

    Parameters
    ----------
    %(matching)s

    Returns
    -------
    %(configuration)s
    """
    _check_type(matching, (Matching,), "matching")
    states = tuple(
        MatchedState(None, None, None, False, False)
        if matching.is_matched(u)
        else SingleState(None, False)
        for u in matching.graph.nodes
    )
    return Configuration._from_states(matching, states)


@fill_doc
def random_configuration(
    matching: Matching,
    rng: Union[int, np.random.Generator, None] = None,
    foreign_rate: float = FOREIGN_RATE,
) -> Configuration:
    """Arbitrary initial configuration drawn from a seeded generator.

    Each pointer is drawn uniformly from N(u) ∪ {None}, except that with
    probability ``foreign_rate`` it is drawn uniformly from V, which may yield
    a non-neighbor (or u itself). Booleans are fair coin flips. Nodes are
    visited in ascending order, so the result only depends on the generator
    state.

    Parameters
    ----------
    %(matching)s
    rng : int | Generator | None
        A numpy Generator, or a seed to create one.
    foreign_rate : float
        Probability for a pointer to be drawn from the whole node set.

    Returns
    -------
    %(configuration)s
    """
    _check_type(matching, (Matching,), "matching")
    foreign_rate = _check_probability(foreign_rate, "foreign_rate")
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(_check_seed(rng))
    graph = matching.graph

    def draw_pointer(u: int) -> Optional[int]:
        if rng.random() < foreign_rate:
            return graph.nodes[int(rng.integers(graph.n_nodes))]
        choices = (None,) + tuple(sorted(graph.neighbors(u)))
        return choices[int(rng.integers(len(choices)))]

    def draw_bool() -> bool:
        return bool(rng.random() < 0.5)

    states = list()
    for u in graph.nodes:
        if matching.is_matched(u):
            p, alpha, beta = (draw_pointer(u) for _ in range(3))
            states.append(MatchedState(p, alpha, beta, draw_bool(), draw_bool()))
        else:
            states.append(SingleState(draw_pointer(u), draw_bool()))
    return Configuration._from_states(matching, tuple(states))
