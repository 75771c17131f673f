"""Guarded rules, atomic steps and the matching built by the pointers.

Every guard and every command reads the pre-transition configuration. Inside
the MatchFirst and MatchSecond commands, the new value of end_u is computed
first and s_u reads it.
"""

from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from ..utils._docs import fill_doc
from ..utils._errors import ContractViolationError
from .predicates import ask_first, ask_second, best_rematch, lowest, null_greater
from .state import Configuration, MatchedState, NodeState, RuleId, SingleState

Move = Tuple[RuleId, NodeState]


def _single_move(configuration: Configuration, u: int) -> Optional[Move]:
    """Highest-priority enabled rule of a single node and its new state."""
    matching = configuration.matching
    state = configuration[u]
    p = state.p
    matched_nbrs = matching.matched_neighbors(u)
    # ResetEnd
    if p is None and state.end:
        return RuleId.RESET_END, SingleState(None, False)
    # UpdateP
    if (
        (p is None and any(configuration[w].p == u for w in matched_nbrs))
        or (p is not None and p not in matched_nbrs)
        or (p is not None and configuration[p].p != u)
    ):
        target = lowest(
            w for w in configuration.graph.neighbors(u) if configuration[w].p == u
        )
        return RuleId.UPDATE_P, SingleState(target, False)
    # UpdateEnd
    if (
        p in matched_nbrs
        and configuration[p].p == u
        and state.end != configuration[p].end
    ):
        return RuleId.UPDATE_END, SingleState(p, configuration[p].end)
    return None


def _matched_move(configuration: Configuration, u: int) -> Optional[Move]:
    """Highest-priority enabled rule of a matched node and its new state."""
    matching = configuration.matching
    state = configuration[u]
    v = matching.partner(u)
    partner = configuration[v]
    singles = matching.single_neighbors(u)
    p, alpha, beta = state.p, state.alpha, state.beta

    def legal(x: Optional[int]) -> bool:
        return x is None or x in singles

    # Update
    best = best_rematch(configuration, u)
    if (
        null_greater(alpha, beta)
        or not legal(alpha)
        or not legal(beta)
        or (alpha == beta and alpha is not None)
        or not legal(p)
        or (
            (alpha, beta) != best
            and (p is None or (configuration[p].p != u and configuration[p].end))
        )
    ):
        return RuleId.UPDATE, MatchedState(None, best[0], best[1], False, False)

    # MatchFirst
    first = ask_first(configuration, u)
    if first is not None:
        second_of_partner = ask_second(configuration, v)
        points_back = p == first and configuration[p].p == u
        end = (
            points_back
            and state.s
            and partner.p == second_of_partner
            and partner.end
        )
        s = points_back and partner.p in (second_of_partner, None)
        if p != first or state.s != s or state.end != end:
            return RuleId.MATCH_FIRST, MatchedState(first, alpha, beta, s, end)

    # MatchSecond
    second = ask_second(configuration, u)
    if second is not None and partner.s:
        end = (
            p == second
            and configuration[p].p == u
            and partner.p == ask_first(configuration, v)
        )
        if p != second or state.end != end or state.s != state.end:
            return RuleId.MATCH_SECOND, MatchedState(second, alpha, beta, end, end)

    # ResetMatch
    if (
        first is None
        and second is None
        and (p, state.s, state.end) != (None, False, False)
    ) or (second is not None and p is not None and not partner.s):
        return RuleId.RESET_MATCH, MatchedState(None, alpha, beta, False, False)
    return None


def _eligible_moves(configuration: Configuration) -> Dict[int, Move]:
    """Enabled rule and resulting state of every eligible node (cached)."""
    if configuration._moves is None:
        matching = configuration.matching
        moves = dict()
        for u in configuration.graph.nodes:
            if matching.is_matched(u):
                move = _matched_move(configuration, u)
            else:
                move = _single_move(configuration, u)
            if move is not None:
                moves[u] = move
        configuration._moves = moves
    return configuration._moves


@fill_doc
def enabled_rule(configuration: Configuration, u: int) -> Optional[RuleId]:
    """Highest-priority rule of u whose guard holds.

    Parameters
    ----------
    %(configuration)s
    %(node)s

    Returns
    -------
    rule : RuleId | None
        The rule u executes if activated, None if u is not eligible.
    """
    if u not in configuration.graph:
        raise ValueError(f"Node {u} is not part of the graph.")
    move = _eligible_moves(configuration).get(u)
    return None if move is None else move[0]


@fill_doc
def apply_rule(configuration: Configuration, u: int, rule: RuleId) -> NodeState:
    """New local state of u after executing its command.

    Parameters
    ----------
    %(configuration)s
    %(node)s
    rule : RuleId
        The rule to execute, which must be the enabled rule of u.

    Returns
    -------
    state : SingleState | MatchedState
        The new state of u.
    """
    if u not in configuration.graph:
        raise ValueError(f"Node {u} is not part of the graph.")
    move = _eligible_moves(configuration).get(u)
    if move is None or move[0] != rule:
        raise ContractViolationError(
            f"Rule {RuleId(rule)} is not the enabled rule of node {u}, "
            f"the enabled rule is {None if move is None else move[0]}."
        )
    return move[1]


def enabled_nodes(configuration: Configuration) -> Mapping[int, RuleId]:
    """Mapping eligible node -> enabled rule, in ascending node order."""
    return {u: move[0] for u, move in _eligible_moves(configuration).items()}


def is_stable(configuration: Configuration) -> bool:
    """True if no node is eligible."""
    return len(_eligible_moves(configuration)) == 0


@fill_doc
def step(configuration: Configuration, active: Iterable[int]) -> Configuration:
    """Execute one transition: every activated node moves simultaneously.

    Parameters
    ----------
    %(configuration)s
    active : iterable of int
        Nonempty set of eligible nodes.

    Returns
    -------
    configuration : Configuration
        The successor. The source configuration is unchanged.
    """
    active = frozenset(active)
    if len(active) == 0:
        raise ContractViolationError("The activation set must be nonempty.")
    moves = _eligible_moves(configuration)
    graph = configuration.graph
    states = list(configuration.states)
    for u in active:
        if u not in graph:
            raise ContractViolationError(f"Node {u} is not part of the graph.")
        if u not in moves:
            raise ContractViolationError(f"Node {u} is not eligible.")
        states[graph.index(u)] = moves[u][1]
    return Configuration._from_states(configuration.matching, tuple(states))


def extract_m_plus(configuration: Configuration) -> FrozenSet[Tuple[int, int]]:
    """Edges built by the protocol.

    Matched edges whose endpoints both point to None, plus non-matched edges
    whose endpoints point to each other. The result is returned for any
    configuration and is only guaranteed to be a matching when stable.
    """
    matching = configuration.matching
    edges = set()
    for a, b in matching.edges:
        if configuration[a].p is None and configuration[b].p is None:
            edges.add((a, b))
    matched_edges = set(matching.edges)
    for a, b in configuration.graph.edges:
        if (a, b) in matched_edges:
            continue
        if configuration[a].p == b and configuration[b].p == a:
            edges.add((a, b))
    return frozenset(edges)
