"""Daemons choosing the activated nodes at each transition."""

from abc import ABC, abstractmethod
from typing import Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional

import numpy as np

from ..protocol.rules import apply_rule, enabled_nodes
from ..protocol.state import Configuration, RuleId, SingleState
from ..utils._checks import _check_probability, _check_type, _check_value
from ..utils._docs import copy_doc, fill_doc
from ..utils._errors import ContractViolationError

Heuristic = Callable[[Configuration, int, RuleId], float]


class DaemonStrategy(ABC):
    """Abstract daemon. Subclasses implement select."""

    name: str = ""

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} | {self.describe()}>"

    def reset(self) -> None:
        """Reset the internal state before a new execution."""

    def describe(self) -> Dict[str, str]:
        """Parameters of the strategy, recorded in the trace header."""
        return dict(strategy=self.name)

    @abstractmethod
    def select(
        self,
        configuration: Configuration,
        eligible: Mapping[int, RuleId],
        rng: np.random.Generator,
    ) -> FrozenSet[int]:
        """Choose the nodes activated in the next transition.

        Parameters
        ----------
        configuration : Configuration
            The current, non-stable, configuration.
        eligible : dict
            Mapping eligible node -> enabled rule, in ascending node order.
        rng : Generator
            The random generator of the execution.

        Returns
        -------
        active : frozenset of int
            Nonempty subset of the eligible nodes.
        """


class Synchronous(DaemonStrategy):
    """Activate every eligible node."""

    name = "sync"

    @copy_doc(DaemonStrategy.select)
    def select(self, configuration, eligible, rng):
        return frozenset(eligible)


class Central(DaemonStrategy):
    """Activate a single eligible node.

    Parameters
    ----------
    mode : str
        ``'lowest'`` picks the lowest identifier, ``'random'`` a uniform one.
    """

    def __init__(self, mode: str = "lowest"):
        _check_value(mode, ("lowest", "random"), "mode")
        self.mode = mode
        self.name = "central" if mode == "lowest" else "central-random"

    @copy_doc(DaemonStrategy.select)
    def select(self, configuration, eligible, rng):
        nodes = sorted(eligible)
        if self.mode == "lowest":
            return frozenset(nodes[:1])
        return frozenset((nodes[int(rng.integers(len(nodes)))],))


def _random_subset(
    nodes: List[int], rng: np.random.Generator, p: float
) -> FrozenSet[int]:
    """Keep each node with probability p, and one uniform node if none is kept."""
    keep = rng.random(len(nodes)) < p
    if not keep.any():
        return frozenset((nodes[int(rng.integers(len(nodes)))],))
    return frozenset(u for u, flag in zip(nodes, keep) if flag)


class DistributedRandom(DaemonStrategy):
    """Activate a random nonempty subset of the eligible nodes.

    Parameters
    ----------
    p : float
        Probability for each eligible node to be activated.
    """

    name = "distributed"

    def __init__(self, p: float = 0.5):
        self.p = _check_probability(p, "p")
        if self.p == 0:
            raise ValueError("Argument 'p' must be strictly positive.")

    def describe(self) -> Dict[str, str]:  # noqa: D102
        return dict(strategy=self.name, p=str(self.p))

    @copy_doc(DaemonStrategy.select)
    def select(self, configuration, eligible, rng):
        return _random_subset(sorted(eligible), rng, self.p)


def flip_heuristic(configuration: Configuration, u: int, rule: RuleId) -> float:
    """Score moves that flip the end variable of a single node or run Update."""
    if rule is RuleId.UPDATE:
        return 2.0
    state = configuration[u]
    if isinstance(state, SingleState):
        if apply_rule(configuration, u, rule).end != state.end:
            return 2.0
    return 1.0


def update_heuristic(configuration: Configuration, u: int, rule: RuleId) -> float:
    """Score Update moves of matched nodes only."""
    return 1.0 if rule is RuleId.UPDATE else 0.0


HEURISTICS: Dict[str, Heuristic] = dict(flip=flip_heuristic, update=update_heuristic)


class AdversarialScored(DaemonStrategy):
    """Activate a random nonempty subset of the best-scored eligible nodes.

    Parameters
    ----------
    heuristic : str | callable
        Name of a registered heuristic (``'flip'`` or ``'update'``) or a
        callable (configuration, node, rule) -> score.
    p : float
        Probability for each best-scored node to be activated.
    """

    name = "adversarial"

    def __init__(self, heuristic="flip", p: float = 0.5):
        _check_type(heuristic, (str, "callable"), "heuristic")
        if isinstance(heuristic, str):
            _check_value(heuristic, HEURISTICS, "heuristic")
            self.heuristic_name = heuristic
            heuristic = HEURISTICS[heuristic]
        else:
            self.heuristic_name = getattr(heuristic, "__name__", "custom")
        self.heuristic = heuristic
        self.p = _check_probability(p, "p")

    def describe(self) -> Dict[str, str]:  # noqa: D102
        return dict(strategy=self.name, heuristic=self.heuristic_name, p=str(self.p))

    @copy_doc(DaemonStrategy.select)
    def select(self, configuration, eligible, rng):
        scores = {
            u: self.heuristic(configuration, u, rule) for u, rule in eligible.items()
        }
        best = max(scores.values())
        top = sorted(u for u, score in scores.items() if score == best)
        return _random_subset(top, rng, self.p)


class Replay(DaemonStrategy):
    """Activate the sets of a recorded list, in order.

    Parameters
    ----------
    activations : iterable of iterable of int
        One activation set per transition.
    """

    name = "replay"

    def __init__(self, activations: Iterable[Iterable[int]]):
        self.activations = [frozenset(active) for active in activations]
        self._cursor = 0

    def reset(self) -> None:  # noqa: D102
        self._cursor = 0

    @copy_doc(DaemonStrategy.select)
    def select(self, configuration, eligible, rng):
        if self._cursor >= len(self.activations):
            raise ContractViolationError(
                f"The replay list is exhausted after {self._cursor} transitions "
                "while the configuration is not stable."
            )
        active = self.activations[self._cursor]
        not_eligible = sorted(active - set(eligible))
        if not_eligible:
            raise ContractViolationError(
                f"Replayed transition {self._cursor} activates nodes "
                f"{not_eligible} which are not eligible."
            )
        self._cursor += 1
        return active


STRATEGIES = ("sync", "central", "central-random", "distributed", "adversarial")


def make_strategy(name: str, heuristic: str = "flip") -> DaemonStrategy:
    """Create a strategy from its command-line name.

    Parameters
    ----------
    name : str
        One of 'sync', 'central', 'central-random', 'distributed' and
        'adversarial'.
    heuristic : str
        Heuristic of the 'adversarial' strategy.

    Returns
    -------
    %(strategy)s
    """
    _check_value(name, STRATEGIES, "strategy")
    if name == "sync":
        return Synchronous()
    if name == "central":
        return Central("lowest")
    if name == "central-random":
        return Central("random")
    if name == "distributed":
        return DistributedRandom()
    return AdversarialScored(heuristic)


fill_doc(make_strategy)


@fill_doc
def select(
    strategy: DaemonStrategy,
    configuration: Configuration,
    rng: Optional[np.random.Generator],
) -> FrozenSet[int]:
    """Ask a daemon for the next activation set and validate it.

    Parameters
    ----------
    %(strategy)s
    %(configuration)s
    rng : Generator
        The random generator of the execution.

    Returns
    -------
    active : frozenset of int
        Nonempty subset of the eligible nodes.
    """
    _check_type(strategy, (DaemonStrategy,), "strategy")
    eligible = enabled_nodes(configuration)
    if len(eligible) == 0:
        raise ContractViolationError(
            "A daemon can not select nodes in a stable configuration."
        )
    active = frozenset(strategy.select(configuration, eligible, rng))
    if len(active) == 0 or not active <= set(eligible):
        raise ContractViolationError(
            f"Strategy {strategy.name} selected {sorted(active)}, which is not a "
            f"nonempty subset of the eligible nodes {sorted(eligible)}."
        )
    return active
