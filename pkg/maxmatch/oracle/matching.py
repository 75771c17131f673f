"""Ground-truth matching computations, independent of the protocol."""

from typing import Iterable, List, NamedTuple, Tuple

import networkx as nx

from ..config.constants import EXACT_CAP
from ..graph import Graph
from ..utils._checks import _check_count, _check_type
from ..utils._docs import fill_doc
from ..utils._errors import CapExceededError


class AugmentingPath3(NamedTuple):
    """Path (x, u, v, y) with (u, v) matched and x, y unmatched."""

    x: int
    u: int
    v: int
    y: int


@fill_doc
def is_matching(graph: Graph, edges: Iterable[Tuple[int, int]]) -> bool:
    """True if the edges belong to the graph and are node-disjoint.

    Parameters
    ----------
    %(graph)s
    %(edges)s
    """
    edges = list(edges)
    if any(u not in graph for edge in edges for u in edge):
        return False
    return nx.is_matching(graph.to_networkx(), edges)


@fill_doc
def max_matching_exact(graph: Graph, cap: int = EXACT_CAP) -> int:
    """Size of a maximum matching, by exhaustive branch-and-bound.

    The lowest free node is either left unmatched or matched to one of its
    free neighbors. A branch is pruned when the number of free nodes having a
    free neighbor can not improve on the best matching found.

    Parameters
    ----------
    %(graph)s
    cap : int
        Largest number of nodes accepted.

    Returns
    -------
    size : int
        The number of edges of a maximum matching.
    """
    _check_type(graph, (Graph,), "graph")
    cap = _check_count(cap, "cap", 0)
    if cap < graph.n_nodes:
        raise CapExceededError(
            f"The exact solver is limited to {cap} nodes, the graph has "
            f"{graph.n_nodes}",
            estimate=graph.n_nodes,
            cap=cap,
        )
    ceiling = graph.n_nodes // 2
    best = 0

    def search(free: frozenset, size: int) -> bool:
        """Explore the branch; return True once the ceiling is reached."""
        nonlocal best
        active = [u for u in free if any(w in free for w in graph.neighbors(u))]
        if size + len(active) // 2 <= best:
            return False
        if len(active) == 0:
            best = size
            return best == ceiling
        u = min(active)
        for w in sorted(graph.neighbors(u)):
            if w in free and search(free - {u, w}, size + 1):
                return True
        return search(free - {u}, size)

    search(frozenset(graph.nodes), 0)
    return best


@fill_doc
def find_3_augmenting_paths(
    graph: Graph, matching: Iterable[Tuple[int, int]]
) -> List[AugmentingPath3]:
    """All 3-augmenting paths of a matching.

    Parameters
    ----------
    %(graph)s
    matching : iterable of tuple of int
        Edge set forming a matching on the graph.

    Returns
    -------
    paths : list of AugmentingPath3
        Paths (x, u, v, y) with x < y, where x, y are not covered by the
        matching, (u, v) is a matched edge, and (x, u), (v, y) are edges.
        Sorted lexicographically.
    """
    matching = [tuple(edge) for edge in matching]
    if not is_matching(graph, matching):
        raise ValueError("The edge set is not a matching on the graph.")
    covered = {u for edge in matching for u in edge}
    paths = set()
    for a, b in matching:
        for u, v in ((a, b), (b, a)):
            for x in graph.neighbors(u):
                if x in covered:
                    continue
                for y in graph.neighbors(v):
                    if y in covered or y == x:
                        continue
                    path = (x, u, v, y) if x < y else (y, v, u, x)
                    paths.add(AugmentingPath3(*path))
    return sorted(paths)
