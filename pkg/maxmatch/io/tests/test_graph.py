import pytest

from maxmatch.graph import Matching, generate, generate_augmenting_chain
from maxmatch.io.graph import read_graph, write_graph


def test_write_read_graph(tmp_path):
    """Test the graph file format."""
    graph, matching = generate_augmenting_chain(2, "descending")
    fname = tmp_path / "chain.txt"
    write_graph(graph, matching, fname)
    with open(fname) as file:
        lines = file.read().splitlines()
    assert lines[0] == "7 6"
    assert sum(line.endswith(" 1") for line in lines[1:]) == 2
    graph2, matching2 = read_graph(fname)
    assert graph2 == graph
    assert matching2 == matching


def test_write_graph_without_matching(tmp_path):
    """Test that every flag is 0 without a matching."""
    fname = tmp_path / "path.txt"
    write_graph(generate("path", 3), None, fname)
    with open(fname) as file:
        assert file.read() == "3 2\n1 2 0\n2 3 0\n"
    # the flagged edge set must be a maximal matching
    with pytest.raises(ValueError, match="maximal"):
        read_graph(fname)


def test_read_graph_comments(tmp_path):
    """Test that comments, blank lines and isolated nodes are supported."""
    fname = tmp_path / "graph.txt"
    fname.write_text("# two edges\n4 2\n\n1 2 1\n# matched\n3 4 1\n")
    graph, matching = read_graph(fname)
    assert graph.nodes == (1, 2, 3, 4)
    assert matching.edges == ((1, 2), (3, 4))
    fname.write_text("3 1\n1 2 1\n")
    graph, matching = read_graph(fname)
    assert graph.nodes == (1, 2, 3)
    assert graph.degree(3) == 0
    assert isinstance(matching, Matching)


@pytest.mark.parametrize(
    "content, match",
    [
        ("", "empty"),
        ("3\n", "header"),
        ("3 2\n1 2 1\n", "announces 2 edges"),
        ("3 1\n1 2\n", "expected 'u v flag'"),
        ("3 1\n1 4 1\n", r"within 1\.\.3"),
        ("3 1\n1 2 2\n", "flag must be 0 or 1"),
        ("3 2\n1 2 1\n2 1 0\n", "Duplicate edge"),
        ("3 1\n2 2 0\n", "Self-loop"),
        ("3 2\n1 2 1\n2 3 1\n", "matching"),
    ],
)
def test_read_graph_invalid(tmp_path, content, match):
    """Test the errors raised on malformed graph files."""
    fname = tmp_path / "graph.txt"
    fname.write_text(content)
    with pytest.raises(ValueError, match=match):
        read_graph(fname)


def test_read_graph_missing(tmp_path):
    """Test a missing file."""
    with pytest.raises(FileNotFoundError):
        read_graph(tmp_path / "missing.txt")
    with pytest.raises(TypeError):
        read_graph(101)
