import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxmatch.graph import build_graph, generate, generate_augmenting_chain
from maxmatch.oracle.matching import (
    AugmentingPath3,
    find_3_augmenting_paths,
    is_matching,
    max_matching_exact,
)
from maxmatch.utils._errors import CapExceededError


def test_is_matching():
    """Test the detection of matchings."""
    graph = generate("path", 4)
    assert is_matching(graph, [])
    assert is_matching(graph, [(1, 2), (3, 4)])
    assert is_matching(graph, [(2, 1)])
    assert not is_matching(graph, [(1, 2), (2, 3)])
    assert not is_matching(graph, [(1, 3)])
    assert not is_matching(graph, [(4, 5)])
    assert not is_matching(graph, [(1, 2), (1, 2)])


@pytest.mark.parametrize(
    "graph, expected",
    [
        (generate("path", 4), 2),
        (generate("path", 5), 2),
        (generate("cycle", 3), 1),
        (generate("cycle", 6), 3),
        (generate("complete_bipartite", 7, n_left=2), 2),
        (build_graph([], nodes=[1, 2, 3]), 0),
        (build_graph([(1, 2), (1, 3), (1, 4)]), 1),
    ],
)
def test_max_matching_exact(graph, expected):
    """Test the exhaustive maximum matching on small graphs."""
    assert max_matching_exact(graph) == expected


def test_max_matching_exact_cap():
    """Test the refusal of graphs above the cap."""
    graph = generate("path", 6)
    with pytest.raises(CapExceededError, match="limited to 5 nodes") as error:
        max_matching_exact(graph, cap=5)
    assert error.value.estimate == 6
    assert error.value.cap == 5
    assert max_matching_exact(graph, cap=6) == 3
    with pytest.raises(TypeError):
        max_matching_exact(graph.edges)


@given(n=st.integers(1, 11), p=st.floats(0.1, 0.9), seed=st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_max_matching_exact_networkx(n, p, seed):
    """Compare the exhaustive solver with networkx."""
    graph = generate("random", n, p=p, seed=seed)
    reference = graph.to_networkx()
    expected = len(nx.max_weight_matching(reference, maxcardinality=True))
    assert max_matching_exact(graph) == expected


def test_find_3_augmenting_paths():
    """Test the enumeration of 3-augmenting paths."""
    graph = generate("path", 4)
    assert find_3_augmenting_paths(graph, [(2, 3)]) == [AugmentingPath3(1, 2, 3, 4)]
    assert find_3_augmenting_paths(graph, [(3, 2)]) == [(1, 2, 3, 4)]
    assert find_3_augmenting_paths(graph, [(1, 2), (3, 4)]) == []
    assert find_3_augmenting_paths(graph, []) == []

    graph, matching = generate_augmenting_chain(2)
    paths = find_3_augmenting_paths(graph, matching.edges)
    assert paths == [(1, 2, 3, 4), (4, 5, 6, 7)]

    # the two single neighbors of u can not both be endpoints
    graph = build_graph([(1, 2), (1, 3), (2, 4)])
    assert find_3_augmenting_paths(graph, [(1, 2)]) == [(3, 1, 2, 4)]
    graph = build_graph([(1, 2), (1, 3), (1, 4)])
    assert find_3_augmenting_paths(graph, [(1, 2)]) == []

    with pytest.raises(ValueError, match="not a matching"):
        find_3_augmenting_paths(generate("path", 4), [(1, 2), (2, 3)])
