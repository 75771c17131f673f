"""Graphs, generators and the fixed underlying maximal matching."""

import hashlib
from dataclasses import dataclass
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    Mapping,
    Optional,
    Tuple,
    Union,
)

import networkx as nx

from .utils._checks import (
    _check_count,
    _check_probability,
    _check_seed,
    _check_type,
    _check_value,
    _ensure_int,
)
from .utils._docs import fill_doc

Edge = Tuple[int, int]


class Graph:
    """Immutable simple undirected graph.

    Use :func:`build_graph` or :func:`generate` to create instances.

    Parameters
    ----------
    nodes : iterable of int
        Node identifiers, unique naturals.
    edges : iterable of tuple of int
        Undirected edges, validated by :func:`build_graph`.
    """

    def __init__(self, nodes: Iterable[int], edges: Iterable[Edge]):
        self._nodes = tuple(sorted(nodes))
        self._edges = tuple(sorted((min(a, b), max(a, b)) for a, b in edges))
        adjacency = {u: set() for u in self._nodes}
        for a, b in self._edges:
            adjacency[a].add(b)
            adjacency[b].add(a)
        self._adjacency = {u: frozenset(adj) for u, adj in adjacency.items()}
        self._index = {u: k for k, u in enumerate(self._nodes)}
        self._max_degree = max(
            (len(adj) for adj in self._adjacency.values()), default=0
        )

    def __repr__(self) -> str:
        return (
            f"<Graph | {self.n_nodes} nodes, {self.n_edges} edges, "
            f"max degree {self.max_degree}>"
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._nodes == other._nodes and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._nodes, self._edges))

    def __contains__(self, u) -> bool:
        return u in self._index

    def neighbors(self, u: int) -> FrozenSet[int]:
        """Neighbors N(u) of a node."""
        return self._adjacency[u]

    def degree(self, u: int) -> int:
        """Number of neighbors of a node."""
        return len(self._adjacency[u])

    def has_edge(self, a: int, b: int) -> bool:
        """True if (a, b) is an edge of the graph."""
        return a in self._adjacency and b in self._adjacency[a]

    def index(self, u: int) -> int:
        """Position of a node in the ascending order of identifiers."""
        return self._index[u]

    def to_networkx(self) -> nx.Graph:
        """Mutable networkx copy of the graph."""
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(self._nodes)
        nx_graph.add_edges_from(self._edges)
        return nx_graph

    @property
    def nodes(self) -> Tuple[int, ...]:
        """Node identifiers in ascending order."""
        return self._nodes

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges (a, b) with a < b in lexicographic order."""
        return self._edges

    @property
    def adjacency(self) -> Mapping[int, FrozenSet[int]]:
        """Adjacency map u -> N(u)."""
        return self._adjacency

    @property
    def n_nodes(self) -> int:
        """Number of nodes n."""
        return len(self._nodes)

    @property
    def n_edges(self) -> int:
        """Number of edges."""
        return len(self._edges)

    @property
    def max_degree(self) -> int:
        """Maximum degree Δ."""
        return self._max_degree


@dataclass(frozen=True)
class RolePartition:
    """Partition of the nodes into matched(V) and single(V).

    Attributes
    ----------
    matched : frozenset of int
        Nodes covered by the underlying matching.
    single : frozenset of int
        Nodes not covered by the underlying matching.
    """

    matched: FrozenSet[int]
    single: FrozenSet[int]

    @property
    def mu(self) -> int:
        """Number of matched nodes μ."""
        return len(self.matched)

    @property
    def sigma(self) -> int:
        """Number of single nodes σ."""
        return len(self.single)


class Matching:
    """The fixed underlying matching M, encoded as the partner map m_u.

    Parameters
    ----------
    %(graph)s
    edges : iterable of tuple of int
        Edges of the matching.
    maximal : bool
        If True, the matching is also required to be maximal.
    """

    def __init__(self, graph: Graph, edges: Iterable[Edge], maximal: bool = True):
        _check_type(graph, (Graph,), "graph")
        _check_type(maximal, (bool,), "maximal")
        partner: Dict[int, Optional[int]] = {u: None for u in graph.nodes}
        matched_edges = list()
        for a, b in edges:
            a, b = _ensure_int(a, "a"), _ensure_int(b, "b")
            if not graph.has_edge(a, b):
                raise ValueError(
                    f"The matched pair ({a}, {b}) is not an edge of the graph."
                )
            for node in (a, b):
                if partner[node] is not None:
                    raise ValueError(
                        f"Node {node} is covered by more than one matched edge, "
                        "the edge set is not a matching."
                    )
            partner[a], partner[b] = b, a
            matched_edges.append((min(a, b), max(a, b)))
        self._graph = graph
        self._partner = partner
        self._edges = tuple(sorted(matched_edges))
        self._roles = RolePartition(
            matched=frozenset(u for u, v in partner.items() if v is not None),
            single=frozenset(u for u, v in partner.items() if v is None),
        )
        self._single_neighbors = {
            u: frozenset(w for w in graph.neighbors(u) if partner[w] is None)
            for u in graph.nodes
        }
        self._matched_neighbors = {
            u: frozenset(w for w in graph.neighbors(u) if partner[w] is not None)
            for u in graph.nodes
        }
        if maximal and not is_maximal(graph, self):
            single = self._roles.single
            uncovered = [(a, b) for a, b in graph.edges if a in single and b in single]
            raise ValueError(
                f"The matching is not maximal, e.g. the edge {uncovered[0]} could "
                "be added."
            )

    def __repr__(self) -> str:
        return (
            f"<Matching | {len(self._edges)} edges, μ={self.roles.mu}, "
            f"σ={self.roles.sigma}>"
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self._graph == other._graph and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._graph, self._edges))

    def partner(self, u: int) -> Optional[int]:
        """Partner m_u of a node, None for a single node."""
        return self._partner[u]

    def is_matched(self, u: int) -> bool:
        """True if u belongs to matched(V)."""
        return self._partner[u] is not None

    def single_neighbors(self, u: int) -> FrozenSet[int]:
        """single(N(u))."""
        return self._single_neighbors[u]

    def matched_neighbors(self, u: int) -> FrozenSet[int]:
        """matched(N(u))."""
        return self._matched_neighbors[u]

    @property
    def graph(self) -> Graph:
        """The graph the matching lives on."""
        return self._graph

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Matched edges (a, b) with a < b."""
        return self._edges

    @property
    def partners(self) -> Mapping[int, Optional[int]]:
        """Partner map u -> m_u."""
        return self._partner

    @property
    def roles(self) -> RolePartition:
        """Partition of the nodes into matched(V) and single(V)."""
        return self._roles


fill_doc(Matching)


def build_graph(edges: Iterable[Edge], nodes: Optional[Iterable[int]] = None) -> Graph:
    """Build a simple undirected graph from a list of edges.

    Parameters
    ----------
    %(edges)s
    nodes : iterable of int | None
        Node identifiers. If None, the nodes are the endpoints of the edges.
        Provide them explicitly to include isolated nodes.

    Returns
    -------
    %(graph)s
    """
    edges = [tuple(edge) for edge in edges]
    seen = set()
    for edge in edges:
        if len(edge) != 2:
            raise ValueError(f"An edge must be a pair of node identifiers, got {edge}.")
        a, b = (_ensure_int(elt, "node") for elt in edge)
        if a < 0 or b < 0:
            raise ValueError(f"Node identifiers must be naturals, got ({a}, {b}).")
        if a == b:
            raise ValueError(f"Self-loop on node {a} is not allowed.")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ValueError(f"Duplicate edge {key}.")
        seen.add(key)
    if nodes is None:
        nodes = {u for edge in seen for u in edge}
    else:
        nodes = [_ensure_int(u, "node") for u in nodes]
        if len(set(nodes)) != len(nodes):
            raise ValueError("Node identifiers must be unique.")
        if any(u < 0 for u in nodes):
            raise ValueError("Node identifiers must be naturals.")
        nodes = set(nodes)
        missing = sorted({u for edge in seen for u in edge} - nodes)
        if len(missing) != 0:
            raise ValueError(
                f"Edges reference node identifiers {missing} absent from the node set."
            )
    return Graph(nodes, seen)


fill_doc(build_graph)


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Freeze a networkx graph with natural node labels, isolated nodes included.

    Parameters
    ----------
    nx_graph : networkx.Graph
        Undirected simple graph.

    Returns
    -------
    %(graph)s
    """
    _check_type(nx_graph, (nx.Graph,), "nx_graph")
    if nx_graph.is_directed() or nx_graph.is_multigraph():
        raise ValueError("Only simple undirected networkx graphs are supported.")
    return build_graph(nx_graph.edges, nx_graph.nodes)


fill_doc(from_networkx)


def generate(
    kind: str,
    n: int,
    *,
    p: float = 0.5,
    seed: Optional[int] = None,
    n_left: Optional[int] = None,
) -> Graph:
    """Generate a graph with node identifiers 1..n.

    Parameters
    ----------
    kind : str
        One of ``'path'``, ``'cycle'``, ``'random'`` (Erdős–Rényi G(n, p)) or
        ``'complete_bipartite'``.
    n : int
        Number of nodes.
    p : float
        Edge probability of the ``'random'`` graphs.
    %(seed)s
    n_left : int | None
        Size of the first side of a ``'complete_bipartite'`` graph. Defaults
        to ``n // 2``.

    Returns
    -------
    %(graph)s
    """
    _check_value(kind, ("path", "cycle", "random", "complete_bipartite"), "kind")
    n = _check_count(n, "n")
    if kind == "path":
        nx_graph = nx.path_graph(n)
    elif kind == "cycle":
        if n < 3:
            raise ValueError(f"A simple cycle needs at least 3 nodes, got {n}.")
        nx_graph = nx.cycle_graph(n)
    elif kind == "random":
        p = _check_probability(p, "p")
        nx_graph = nx.gnp_random_graph(n, p, seed=_check_seed(seed))
    else:
        n_left = n // 2 if n_left is None else _check_count(n_left, "n_left", 0)
        if n_left > n:
            raise ValueError(
                f"Argument 'n_left' ({n_left}) can not exceed 'n' ({n})."
            )
        nx_graph = nx.complete_bipartite_graph(n_left, n - n_left)
    return from_networkx(nx.convert_node_labels_to_integers(nx_graph, first_label=1))


fill_doc(generate)


def generate_augmenting_chain(
    k: int, id_order: str = "ascending"
) -> Tuple[Graph, Matching]:
    """Generate a chain of k node-disjoint 3-augmenting paths.

    The chain is x_1, u_1, v_1, x_2, u_2, v_2, ..., x_{k+1} where the edges
    (u_i, v_i) form the matching and the x_i are single nodes. Consecutive
    paths (x_i, u_i, v_i, x_{i+1}) share their endpoint.

    Parameters
    ----------
    k : int
        Number of matched edges in the chain.
    id_order : str
        ``'ascending'`` gives identifiers 1..3k+1 along the chain, so that
        x_1 < x_2 < ... < x_{k+1}. ``'descending'`` reverses the labelling.

    Returns
    -------
    %(graph)s
    %(matching)s
    """
    k = _check_count(k, "k")
    _check_value(id_order, ("ascending", "descending"), "id_order")
    n = 3 * k + 1
    if id_order == "ascending":
        label = [position + 1 for position in range(n)]
    else:
        label = [n - position for position in range(n)]
    edges = [(label[pos], label[pos + 1]) for pos in range(n - 1)]
    matched = [(label[3 * i + 1], label[3 * i + 2]) for i in range(k)]
    graph = build_graph(edges)
    return graph, Matching(graph, matched, maximal=True)


fill_doc(generate_augmenting_chain)


def greedy_maximal_matching(graph: Graph, order: str = "ascending") -> Matching:
    """Build a maximal matching greedily, scanning the edges in order.

    Stand-in for a stabilized self-stabilizing maximal matching: the result
    is computed once and never changes during an execution.

    Parameters
    ----------
    %(graph)s
    order : str
        ``'ascending'`` scans the edges (a, b), a < b, in lexicographic order,
        ``'descending'`` in reverse lexicographic order.

    Returns
    -------
    %(matching)s
    """
    _check_type(graph, (Graph,), "graph")
    _check_value(order, ("ascending", "descending"), "order")
    edges = graph.edges if order == "ascending" else tuple(reversed(graph.edges))
    covered = set()
    matched = list()
    for a, b in edges:
        if a not in covered and b not in covered:
            matched.append((a, b))
            covered.update((a, b))
    return Matching(graph, matched, maximal=True)


fill_doc(greedy_maximal_matching)


def is_maximal(graph: Graph, matching: Union[Matching, Iterable[Edge]]) -> bool:
    """Check that no edge can be added to a matching.

    Parameters
    ----------
    %(graph)s
    matching : Matching | iterable of tuple of int
        The matching, as a Matching or as an edge set.

    Returns
    -------
    maximal : bool
        True iff the edges form a matching of the graph and every edge of the
        graph has at least one matched endpoint.
    """
    edges = matching.edges if isinstance(matching, Matching) else list(matching)
    if any(u not in graph for edge in edges for u in edge):
        return False
    return nx.is_maximal_matching(graph.to_networkx(), edges)


fill_doc(is_maximal)


def role_partition(matching: Matching) -> RolePartition:
    """Return the partition of the nodes into matched(V) and single(V)."""
    return matching.roles


def iter_graph_lines(
    graph: Graph, matching: Optional[Matching] = None
) -> Iterator[str]:
    """Yield the lines of the ``n m`` / ``u v flag`` text serialisation.

    Parameters
    ----------
    %(graph)s
    matching : Matching | None
        If provided, matched edges carry the flag 1.

    Yields
    ------
    line : str
        One line, without the trailing newline.
    """
    if graph.nodes != tuple(range(1, graph.n_nodes + 1)):
        raise ValueError(
            "The text format requires node identifiers 1..n, relabel the graph first."
        )
    matched = set() if matching is None else set(matching.edges)
    yield f"{graph.n_nodes} {graph.n_edges}"
    for a, b in graph.edges:
        yield f"{a} {b} {int((a, b) in matched)}"


fill_doc(iter_graph_lines)


def graph_hash(graph: Graph, matching: Optional[Matching] = None) -> str:
    """SHA-256 digest identifying a graph and its underlying matching.

    Unlike :func:`iter_graph_lines`, arbitrary node identifiers are accepted.
    """
    nodes = " ".join(str(u) for u in graph.nodes)
    matched = set() if matching is None else set(matching.edges)
    lines = [nodes] + [f"{a} {b} {int((a, b) in matched)}" for a, b in graph.edges]
    return hashlib.sha256("\n".join(lines).encode("utf-8")).hexdigest()
