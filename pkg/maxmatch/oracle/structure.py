"""Structural checks of stable configurations and of recorded executions."""

from collections import Counter
from typing import FrozenSet, Optional

from ..config.constants import EXACT_CAP
from ..graph import Graph
from ..protocol.predicates import ask, ask_first, ask_second, candidates
from ..protocol.rules import enabled_rule, extract_m_plus, is_stable
from ..protocol.state import Configuration, RuleId
from ..utils._checks import _check_type
from ..utils._docs import fill_doc
from ..utils._errors import ContractViolationError
from ..utils._logs import logger, verbose
from .matching import find_3_augmenting_paths, is_matching, max_matching_exact
from .report import VerificationReport


def _require_stable(configuration: Configuration) -> None:
    _check_type(configuration, (Configuration,), "configuration")
    if not is_stable(configuration):
        raise ContractViolationError("The configuration is not stable.")


def _edge_shape(configuration: Configuration, u: int, v: int) -> Optional[str]:
    """'null' or 'rematched' for a matched edge, None for any other shape."""
    matching = configuration.matching
    pu, pv = configuration[u].p, configuration[v].p
    if pu is None and pv is None:
        return "null"
    if (
        pu is not None
        and pv is not None
        and pu != pv
        and pu in matching.single_neighbors(u)
        and pv in matching.single_neighbors(v)
        and configuration[pu].p == u
        and configuration[pv].p == v
    ):
        return "rematched"
    return None


@fill_doc
def verify_stable_structure(configuration: Configuration) -> VerificationReport:
    """Check the shape of a stable configuration.

    Every matched edge (u, v) is either left alone (p_u = p_v = None) or
    rematched to two distinct single nodes pointing back. Every matched node
    points to its Ask target. Every single node pointing somewhere points to
    a matched neighbor that points back with the same end value, and belongs
    to a 3-augmenting path of the underlying matching. The pointers build a
    matching at least as large as the underlying one.

    Parameters
    ----------
    %(configuration)s

    Returns
    -------
    %(report_return)s
    """
    _require_stable(configuration)
    matching = configuration.matching
    graph = configuration.graph
    report = VerificationReport()

    shapes = Counter()
    bad_edges = list()
    for u, v in matching.edges:
        shape = _edge_shape(configuration, u, v)
        shapes[shape] += 1
        if shape is None:
            bad_edges.append((u, v))
    report.add(
        "matched_edge_shape",
        len(bad_edges) == 0,
        f"unexpected shape on {bad_edges}"
        if bad_edges
        else f"{shapes['null']} unchanged, {shapes['rematched']} rematched",
    )

    wrong_ask = [
        u
        for u in sorted(matching.roles.matched)
        if configuration[u].p != ask(configuration, u)
    ]
    report.add(
        "matched_points_to_ask",
        len(wrong_ask) == 0,
        f"p_u differs from Ask(u) for nodes {wrong_ask}" if wrong_ask else "",
    )

    wrong_single, no_path = list(), list()
    for x in sorted(matching.roles.single):
        u = configuration[x].p
        if u is None:
            continue
        if (
            u not in matching.matched_neighbors(x)
            or configuration[u].p != x
            or configuration[u].end != configuration[x].end
        ):
            wrong_single.append(x)
            continue
        v = matching.partner(u)
        if len(matching.single_neighbors(v) - {x}) == 0:
            no_path.append(x)
    report.add(
        "single_pointer_consistency",
        len(wrong_single) == 0,
        f"inconsistent single nodes {wrong_single}" if wrong_single else "",
    )
    report.add(
        "single_on_augmenting_path",
        len(no_path) == 0,
        f"single nodes off any 3-augmenting path {no_path}" if no_path else "",
    )

    m_plus = extract_m_plus(configuration)
    report.add(
        "m_plus_is_matching",
        is_matching(graph, m_plus),
        f"M+ = {sorted(m_plus)}",
    )
    report.add(
        "m_plus_not_smaller",
        len(m_plus) >= len(matching.edges),
        f"|M+| = {len(m_plus)}, |M| = {len(matching.edges)}",
    )
    return report


@fill_doc
@verbose
def verify_approximation(
    configuration: Configuration,
    graph: Optional[Graph] = None,
    exact_cap: int = EXACT_CAP,
    *,
    verbose: Optional[bool] = None,
) -> VerificationReport:
    """Check the 2/3 approximation of the matching built in a stable configuration.

    Parameters
    ----------
    %(configuration)s
    graph : Graph | None
        The graph, by default the graph of the configuration.
    %(exact_cap)s
    %(verbose)s

    Returns
    -------
    %(report_return)s
    """
    _require_stable(configuration)
    graph = configuration.graph if graph is None else graph
    _check_type(graph, (Graph,), "graph")
    if graph != configuration.graph:
        raise ValueError("The graph differs from the graph of the configuration.")
    report = VerificationReport()
    m_plus = extract_m_plus(configuration)
    if not is_matching(graph, m_plus):
        report.add(
            "no_3_augmenting_path", False, f"M+ = {sorted(m_plus)} is not a matching"
        )
        return report
    paths = find_3_augmenting_paths(graph, m_plus)
    report.add(
        "no_3_augmenting_path",
        len(paths) == 0,
        f"3-augmenting paths {[tuple(path) for path in paths]}" if paths else "",
    )
    if exact_cap < graph.n_nodes:
        logger.warning(
            "Graph with %i nodes above the exact-solver cap %i, the ratio check is "
            "skipped.",
            graph.n_nodes,
            exact_cap,
        )
        report.skip(
            "two_thirds_ratio",
            f"{graph.n_nodes} nodes above the exact-solver cap {exact_cap}",
        )
        return report
    maximum = max_matching_exact(graph, exact_cap)
    report.add(
        "two_thirds_ratio",
        3 * len(m_plus) >= 2 * maximum,
        f"|M+| = {len(m_plus)}, maximum = {maximum}",
    )
    return report


@fill_doc
def cand(configuration: Configuration, u: int) -> FrozenSet[int]:
    """Single neighbors considered by the best rematch of u.

    Parameters
    ----------
    %(configuration)s
    %(matched_node)s

    Returns
    -------
    nodes : frozenset of int
        Single neighbors x of u with p_x = u or end_x False.
    """
    if not configuration.matching.is_matched(u):
        raise ValueError(f"Node {u} is single, a matched node is required.")
    return candidates(configuration, u)


def _is_stop_oriented(configuration: Configuration, u: int, v: int) -> bool:
    """Stop conditions with u asking first and v asking second."""
    matching = configuration.matching
    su, sv = configuration[u], configuration[v]
    return (
        su.p in matching.single_neighbors(u)
        and su.p == ask_first(configuration, u)
        and configuration[su.p].p == u
        and sv.p in matching.single_neighbors(v)
        and sv.p == ask_second(configuration, v)
        and configuration[sv.p].p == v
        and su.s
        and su.end
        and sv.s
        and sv.end
    )


@fill_doc
def is_stop_configuration(configuration: Configuration, u: int) -> bool:
    """True if the matched pair (u, m_u) can never move again.

    Parameters
    ----------
    %(configuration)s
    %(matched_node)s

    Returns
    -------
    stop : bool
        True if one endpoint asks first, the other asks second, both are
        pointed back by their single targets, and s and end are True on both.
    """
    v = configuration.matching.partner(u)
    if v is None:
        raise ValueError(f"Node {u} is single, a matched node is required.")
    return _is_stop_oriented(configuration, u, v) or _is_stop_oriented(
        configuration, v, u
    )


def _is_settled_stop(configuration: Configuration, u: int, v: int) -> bool:
    """Stop configuration of (u, v) with the rematch candidates of both legal.

    Update is the only rule a stop configuration leaves enabled, and only on an
    endpoint still holding arbitrary initial α/β values.
    """
    return (
        is_stop_configuration(configuration, u)
        and enabled_rule(configuration, u) is not RuleId.UPDATE
        and enabled_rule(configuration, v) is not RuleId.UPDATE
    )


@fill_doc
def check_stop_persistence(trace) -> VerificationReport:
    """Check that a matched pair never moves after a stop configuration.

    A pair is tracked from the first configuration where it meets the stop
    conditions and neither endpoint is enabled for Update.

    Parameters
    ----------
    %(trace)s

    Returns
    -------
    %(report_return)s
    """
    matching = trace.initial.matching
    stopped = dict()  # matched edge -> index of the first stop configuration
    violations = list()
    configurations = trace.configurations
    for index, configuration in enumerate(configurations):
        for u, v in matching.edges:
            if (u, v) not in stopped and _is_settled_stop(configuration, u, v):
                stopped[(u, v)] = index
        if index == len(trace.steps):
            break
        activated = trace.steps[index].activations
        for (u, v), start in stopped.items():
            moved = sorted({u, v} & set(activated))
            if moved:
                violations.append(
                    f"pair ({u}, {v}) stopped at configuration {start}, "
                    f"{moved} moved at step {index}"
                )
    report = VerificationReport()
    report.add(
        "stop_persistence",
        len(violations) == 0,
        "; ".join(violations[:5])
        if violations
        else f"{len(stopped)} pairs reached a stop configuration",
    )
    return report
