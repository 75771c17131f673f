"""Helper functions and predicates evaluated by the guards.

Pointers compare with None greater than every identifier.
"""

from typing import FrozenSet, Iterable, Optional, Tuple

from ..utils._docs import fill_doc
from .state import Configuration


def lowest(nodes: Iterable[Optional[int]]) -> Optional[int]:
    """Lowest identifier of a set, None if the set is empty.

    None elements are ignored.
    """
    return min((u for u in nodes if u is not None), default=None)


def unique_count(values: Iterable[Optional[int]]) -> int:
    """Number of distinct non-null values of a multiset."""
    return len({value for value in values if value is not None})


def null_greater(a: Optional[int], b: Optional[int]) -> bool:
    """a > b, with None greater than every identifier."""
    if a is None:
        return b is not None
    if b is None:
        return False
    return a > b


def candidates(configuration: Configuration, u: int) -> FrozenSet[int]:
    """Single neighbors x of u with p_x = u or end_x False."""
    return frozenset(
        x
        for x in configuration.matching.single_neighbors(u)
        if configuration[x].p == u or not configuration[x].end
    )


@fill_doc
def best_rematch(
    configuration: Configuration, u: int
) -> Tuple[Optional[int], Optional[int]]:
    """The two lowest candidates of u for a rematch.

    Parameters
    ----------
    %(configuration)s
    %(matched_node)s

    Returns
    -------
    a : int | None
        Lowest single neighbor x with p_x = u or end_x False.
    b : int | None
        Lowest such neighbor different from a.
    """
    _check_matched(configuration, u)
    pool = sorted(candidates(configuration, u))
    pool += [None, None]
    return pool[0], pool[1]


@fill_doc
def ask_first(configuration: Configuration, u: int) -> Optional[int]:
    """α_u if u is the node proposing first to its candidate, else None.

    Parameters
    ----------
    %(configuration)s
    %(matched_node)s

    Returns
    -------
    target : int | None
        The single node u asks for, or None.
    """
    _check_matched(configuration, u)
    v = configuration.matching.partner(u)
    su, sv = configuration[u], configuration[v]
    if su.alpha is None or sv.alpha is None:
        return None
    if unique_count((su.alpha, su.beta, sv.alpha, sv.beta)) < 2:
        return None
    if (
        su.alpha < sv.alpha
        or (su.alpha == sv.alpha and su.beta is None)
        or (su.alpha == sv.alpha and sv.beta is not None and u < v)
    ):
        return su.alpha
    return None


@fill_doc
def ask_second(configuration: Configuration, u: int) -> Optional[int]:
    """Lowest of {α_u, β_u} minus {α_v} if the partner v asks first.

    Parameters
    ----------
    %(configuration)s
    %(matched_node)s

    Returns
    -------
    target : int | None
        The single node u asks for, or None.
    """
    _check_matched(configuration, u)
    v = configuration.matching.partner(u)
    if ask_first(configuration, v) is None:
        return None
    su, sv = configuration[u], configuration[v]
    return lowest({su.alpha, su.beta} - {sv.alpha})


def ask(configuration: Configuration, u: int) -> Optional[int]:
    """ask_first(u) when it is not None, ask_second(u) otherwise."""
    first = ask_first(configuration, u)
    return first if first is not None else ask_second(configuration, u)


def is_first(configuration: Configuration, u: int) -> bool:
    """True if the matched node u asks first."""
    return ask_first(configuration, u) is not None


def is_second(configuration: Configuration, u: int) -> bool:
    """True if the matched node u asks second."""
    return ask_second(configuration, u) is not None


def _check_matched(configuration: Configuration, u: int) -> None:
    if u not in configuration.graph:
        raise ValueError(f"Node {u} is not part of the graph.")
    if not configuration.matching.is_matched(u):
        raise ValueError(f"Node {u} is single, a matched node is required.")
