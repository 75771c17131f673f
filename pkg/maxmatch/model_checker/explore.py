"""Exhaustive exploration of the transitions under every daemon choice."""

from array import array
from typing import Optional, Sequence, Tuple

import numpy as np

from ..config.constants import TRANSITION_CAP
from ..graph import Graph, Matching
from ..protocol.rules import _eligible_moves
from ..protocol.state import Configuration
from ..utils._checks import _check_count, _check_type
from ..utils._docs import fill_doc
from ..utils._errors import CapExceededError
from ..utils._logs import logger, verbose
from .domains import StateEncoder, estimate_state_space, initial_codes


class StateSpace:
    """Configurations reachable from a set of initial configurations.

    The transition relation is stored in compressed sparse rows: the
    successors of the configuration of index i are
    ``targets[offsets[i]:offsets[i + 1]]``, each transition weighted by the
    number of activated nodes in ``weights``.

    Parameters
    ----------
    encoder : StateEncoder
        Encoding of the configurations.
    codes : array of int | None
        Code of each configuration index. None when every configuration of the
        encoder is explored, in which case the index is the code.
    offsets : array of int
        Row offsets, one per configuration plus one.
    targets : array of int
        Successor index of each transition.
    weights : array of int
        Number of activated nodes of each transition.
    n_eligible : array of int
        Number of eligible nodes of each configuration.
    n_initial : int
        Number of initial configurations.
    """

    def __init__(
        self,
        encoder: StateEncoder,
        codes: Optional[np.ndarray],
        offsets: np.ndarray,
        targets: np.ndarray,
        weights: np.ndarray,
        n_eligible: np.ndarray,
        n_initial: int,
    ):
        self.encoder = encoder
        self.codes = codes
        self.offsets = offsets
        self.targets = targets
        self.weights = weights
        self.n_eligible = n_eligible
        self.n_initial = n_initial
        self._index = (
            None if codes is None else {int(code): k for k, code in enumerate(codes)}
        )
        self._analysis = None

    def __repr__(self) -> str:
        return (
            f"<StateSpace | {self.n_configurations} configurations, "
            f"{self.n_transitions} transitions, {self.stable.size} stable>"
        )

    @property
    def matching(self) -> Matching:
        """The underlying matching."""
        return self.encoder.matching

    @property
    def n_configurations(self) -> int:
        """Number of explored configurations."""
        return self.offsets.size - 1

    @property
    def n_transitions(self) -> int:
        """Number of transitions, one per nonempty activation set."""
        return self.targets.size

    @property
    def stable(self) -> np.ndarray:
        """Indices of the configurations without eligible node."""
        return np.flatnonzero(self.n_eligible == 0)

    def configuration(self, index: int) -> Configuration:
        """Configuration of an index."""
        code = index if self.codes is None else int(self.codes[index])
        return self.encoder.decode(code)

    def index(self, configuration: Configuration) -> int:
        """Index of an explored configuration."""
        code = self.encoder.encode(configuration)
        if self._index is None:
            return code
        try:
            return self._index[code]
        except KeyError:
            raise ValueError("The configuration was not explored.")

    def successors(self, index: int) -> Tuple[np.ndarray, np.ndarray]:
        """Successor indices and transition weights of a configuration."""
        start, stop = self.offsets[index], self.offsets[index + 1]
        return self.targets[start:stop], self.weights[start:stop]


def _subset_sums(deltas: Sequence[int]) -> Tuple[list, list]:
    """Code delta and size of every nonempty subset of the moves."""
    n = 1 << len(deltas)
    sums, sizes = [0] * n, [0] * n
    for mask in range(1, n):
        low = mask & -mask
        bit = low.bit_length() - 1
        sums[mask] = sums[mask ^ low] + deltas[bit]
        sizes[mask] = sizes[mask ^ low] + 1
    return sums[1:], sizes[1:]


@fill_doc
@verbose
def explore(
    graph: Graph,
    matching: Matching,
    initial: Optional[Sequence[Configuration]] = None,
    pointer_domain: str = "neighbors",
    transition_cap: int = TRANSITION_CAP,
    *,
    verbose: Optional[bool] = None,
) -> StateSpace:
    """Explore every execution from a set of initial configurations.

    From every reached configuration with k eligible nodes, the 2^k - 1
    nonempty activation sets are explored.

    Parameters
    ----------
    %(graph)s
    %(matching)s
    initial : list of Configuration | None
        Initial configurations. If None, every configuration of the pointer
        domain is an initial configuration.
    %(pointer_domain)s
    %(transition_cap)s
    %(verbose)s

    Returns
    -------
    space : StateSpace
        The reachable configurations and the transitions between them.
    """
    _check_type(graph, (Graph,), "graph")
    _check_type(matching, (Matching,), "matching")
    if matching.graph != graph:
        raise ValueError("The matching is not defined on the provided graph.")
    transition_cap = _check_count(transition_cap, "transition_cap")

    full = initial is None
    if full:
        configurations, estimate = estimate_state_space(graph, matching, pointer_domain)
        if transition_cap < estimate:
            raise CapExceededError(
                f"Exploring {configurations} configurations of {graph!r} over the "
                f"'{pointer_domain}' domain is refused",
                estimate=estimate,
                cap=transition_cap,
            )
        encoder = StateEncoder(matching, pointer_domain)
        order = None
        n_initial = encoder.size
    else:
        initial = list(initial)
        for configuration in initial:
            _check_type(configuration, (Configuration,), "initial")
            if configuration.matching != matching:
                raise ValueError("An initial configuration uses another matching.")
        encoder = StateEncoder(matching, pointer_domain, extra=initial)
        order = initial_codes(encoder, initial)
        index = {code: k for k, code in enumerate(order)}
        n_initial = len(order)
    logger.info(
        "Exploring %r from %i initial configurations ('%s' domain).",
        graph,
        n_initial,
        pointer_domain,
    )

    places = encoder.places
    position = {u: k for k, u in enumerate(graph.nodes)}
    offsets, targets = array("q", [0]), array("q")
    weights, n_eligible = array("B"), array("B")
    current = 0
    while current < (encoder.size if full else len(order)):
        code = current if full else order[current]
        configuration = encoder.decode(code)
        deltas = list()
        for u, (_, state) in _eligible_moves(configuration).items():
            k = position[u]
            old = encoder.digit(k, configuration.states[k])
            deltas.append((encoder.digit(k, state) - old) * places[k])
        n_eligible.append(len(deltas))
        if len(deltas) != 0:
            sums, sizes = _subset_sums(deltas)
            if full:
                targets.extend(code + delta for delta in sums)
            else:
                for delta in sums:
                    successor = code + delta
                    if successor not in index:
                        index[successor] = len(order)
                        order.append(successor)
                    targets.append(index[successor])
            weights.extend(sizes)
            if transition_cap < len(targets):
                raise CapExceededError(
                    f"Exploration of {graph!r} stopped after {current + 1} "
                    "configurations, no partial result is returned",
                    estimate=len(targets),
                    cap=transition_cap,
                )
        offsets.append(len(targets))
        current += 1

    space = StateSpace(
        encoder,
        None if full else np.array(order, dtype=np.int64),
        np.array(offsets, dtype=np.int64),
        np.array(targets, dtype=np.int64),
        np.array(weights, dtype=np.uint8),
        np.array(n_eligible, dtype=np.uint8),
        n_initial,
    )
    logger.info("Explored %r.", space)
    return space
