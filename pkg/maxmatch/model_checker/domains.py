"""Finite per-node state domains and the mixed-radix encoding of configurations."""

from itertools import product
from math import prod
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..config.constants import POINTER_DOMAINS, TRANSITION_CAP
from ..graph import Graph, Matching
from ..protocol.state import Configuration, MatchedState, NodeState, SingleState
from ..utils._checks import _check_count, _check_type, _check_value
from ..utils._docs import fill_doc
from ..utils._errors import CapExceededError


def pointer_values(
    matching: Matching, u: int, pointer_domain: str
) -> List[Optional[int]]:
    """Values enumerated for the pointers of a node, None first."""
    _check_value(pointer_domain, POINTER_DOMAINS, "pointer_domain")
    graph = matching.graph
    if pointer_domain == "valid_plus_corrupt":
        if matching.is_matched(u):
            targets = matching.single_neighbors(u)
        else:
            targets = matching.matched_neighbors(u)
        foreign = min((w for w in graph.nodes if w not in targets), default=None)
    else:
        targets = graph.neighbors(u)
        foreign = None
        if pointer_domain == "neighbors_plus_foreign":
            foreign = min((w for w in graph.nodes if w not in targets), default=None)
    values: List[Optional[int]] = [None] + sorted(targets)
    if foreign is not None:
        values.append(foreign)
    return values


def node_domain(matching: Matching, u: int, pointer_domain: str) -> List[NodeState]:
    """All the states of a node over a pointer domain."""
    pointers = pointer_values(matching, u, pointer_domain)
    booleans = (False, True)
    if matching.is_matched(u):
        return [
            MatchedState(*values)
            for values in product(pointers, pointers, pointers, booleans, booleans)
        ]
    return [SingleState(*values) for values in product(pointers, booleans)]


class StateEncoder:
    """Bijection between configurations and integers in [0, size).

    The digit of the k-th node (ascending order) is the index of its state in
    its domain, and the code is the mixed-radix number with the first node as
    least significant digit.

    Parameters
    ----------
    %(matching)s
    %(pointer_domain)s
    extra : iterable of Configuration
        Configurations whose states are appended to the domains when missing.
    """

    def __init__(
        self,
        matching: Matching,
        pointer_domain: str,
        extra: Iterable[Configuration] = (),
    ):
        _check_type(matching, (Matching,), "matching")
        self.matching = matching
        self.pointer_domain = pointer_domain
        nodes = matching.graph.nodes
        self.domains: List[List[NodeState]] = [
            node_domain(matching, u, pointer_domain) for u in nodes
        ]
        self._lookup = [
            {state: digit for digit, state in enumerate(domain)}
            for domain in self.domains
        ]
        for configuration in extra:
            for k, state in enumerate(configuration.states):
                if state not in self._lookup[k]:
                    self._lookup[k][state] = len(self.domains[k])
                    self.domains[k].append(state)
        self.radices: Tuple[int, ...] = tuple(len(domain) for domain in self.domains)
        places, place = list(), 1
        for radix in self.radices:
            places.append(place)
            place *= radix
        self.places: Tuple[int, ...] = tuple(places)
        self.size: int = place

    def __repr__(self) -> str:
        return f"<StateEncoder | {self.size} configurations, {self.pointer_domain}>"

    def digit(self, k: int, state: NodeState) -> int:
        """Digit of the state of the k-th node."""
        try:
            return self._lookup[k][state]
        except KeyError:
            u = self.matching.graph.nodes[k]
            raise RuntimeError(
                f"State {state} of node {u} is outside the '{self.pointer_domain}' "
                "domain, which must be closed under the rules."
            )

    def encode(self, configuration: Configuration) -> int:
        """Code of a configuration."""
        return sum(
            self.digit(k, state) * place
            for k, (state, place) in enumerate(zip(configuration.states, self.places))
        )

    def digits(self, code: int) -> List[int]:
        """Digits of a code, first node first."""
        digits = list()
        for radix in self.radices:
            code, digit = divmod(code, radix)
            digits.append(digit)
        return digits

    def decode(self, code: int) -> Configuration:
        """Configuration of a code."""
        states = tuple(
            domain[digit] for domain, digit in zip(self.domains, self.digits(code))
        )
        return Configuration._from_states(self.matching, states)


fill_doc(StateEncoder)


@fill_doc
def estimate_state_space(
    graph: Graph, matching: Matching, pointer_domain: str = "neighbors"
) -> Tuple[int, int]:
    """Size of the enumeration over a pointer domain.

    Parameters
    ----------
    %(graph)s
    %(matching)s
    %(pointer_domain)s

    Returns
    -------
    configurations : int
        Product of the per-node domain sizes.
    transitions : int
        Upper bound on the number of transitions, one per nonempty subset of
        the nodes from every configuration.
    """
    _check_type(graph, (Graph,), "graph")
    _check_value(pointer_domain, POINTER_DOMAINS, "pointer_domain")
    if matching.graph != graph:
        raise ValueError("The matching is not defined on the provided graph.")
    sizes = list()
    for u in graph.nodes:
        pointers = len(pointer_values(matching, u, pointer_domain))
        sizes.append(pointers**3 * 4 if matching.is_matched(u) else pointers * 2)
    configurations = prod(sizes)
    return configurations, configurations * (2**graph.n_nodes - 1)


@fill_doc
def enumerate_initial_configurations(
    graph: Graph,
    matching: Matching,
    pointer_domain: str = "neighbors",
    transition_cap: int = TRANSITION_CAP,
) -> Iterator[Configuration]:
    """Iterate over every configuration of a pointer domain.

    Parameters
    ----------
    %(graph)s
    %(matching)s
    %(pointer_domain)s
    %(transition_cap)s

    Returns
    -------
    configurations : iterator of Configuration
        The configurations, in increasing code order. The size check runs
        before the iterator is returned.
    """
    transition_cap = _check_count(transition_cap, "transition_cap")
    configurations, transitions = estimate_state_space(graph, matching, pointer_domain)
    if transition_cap < transitions:
        raise CapExceededError(
            f"Enumerating {configurations} configurations of {graph!r} over the "
            f"'{pointer_domain}' domain is refused",
            estimate=transitions,
            cap=transition_cap,
        )
    encoder = StateEncoder(matching, pointer_domain)
    return (encoder.decode(code) for code in range(encoder.size))


def initial_codes(encoder: StateEncoder, initial: Sequence[Configuration]) -> List[int]:
    """Codes of explicit initial configurations, duplicates removed."""
    return list(dict.fromkeys(encoder.encode(elt) for elt in initial))
