from pathlib import Path
from typing import Optional, Tuple, Union

from ..graph import Graph, Matching, build_graph, iter_graph_lines
from ..utils._checks import _check_type
from ..utils._docs import fill_doc


@fill_doc
def write_graph(
    graph: Graph, matching: Optional[Matching], fname: Union[str, Path]
) -> None:
    """Write a graph and its matching in the ``n m`` / ``u v flag`` format.

    Parameters
    ----------
    %(graph)s
    matching : Matching | None
        Matched edges are flagged with 1. If None, every flag is 0.
    fname : str | Path
        Path to the output file.
    """
    _check_type(fname, ("path-like",), "fname")
    with open(fname, "w", encoding="utf-8") as file:
        for line in iter_graph_lines(graph, matching):
            file.write(line + "\n")


def read_graph(fname: Union[str, Path]) -> Tuple[Graph, Matching]:
    """Read a graph and its matching from the ``n m`` / ``u v flag`` format.

    Parameters
    ----------
    fname : str | Path
        Path to the file. Blank lines and lines starting with '#' are ignored.

    Returns
    -------
    graph : Graph
        The graph with node identifiers 1..n.
    matching : Matching
        The edges flagged with 1, required to form a maximal matching.
    """
    _check_type(fname, ("path-like",), "fname")
    with open(fname, encoding="utf-8") as file:
        lines = [
            (k + 1, line.split())
            for k, line in enumerate(file)
            if line.strip() and not line.lstrip().startswith("#")
        ]
    if len(lines) == 0:
        raise ValueError(f"The graph file '{fname}' is empty.")
    lineno, header = lines[0]
    try:
        n, m = (int(elt) for elt in header)
    except ValueError:
        raise ValueError(
            f"Line {lineno}: expected the header 'n m', got '{' '.join(header)}'."
        )
    if n < 0 or m < 0:
        raise ValueError(f"Line {lineno}: 'n' and 'm' must be naturals.")
    if len(lines) - 1 != m:
        raise ValueError(
            f"The header announces {m} edges but the file lists {len(lines) - 1}."
        )
    edges, matched = list(), list()
    for lineno, fields in lines[1:]:
        try:
            a, b, flag = (int(elt) for elt in fields)
        except ValueError:
            raise ValueError(
                f"Line {lineno}: expected 'u v flag', got '{' '.join(fields)}'."
            )
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(
                f"Line {lineno}: node identifiers must be within 1..{n}, got "
                f"({a}, {b})."
            )
        if flag not in (0, 1):
            raise ValueError(f"Line {lineno}: the flag must be 0 or 1, got {flag}.")
        edges.append((a, b))
        if flag == 1:
            matched.append((a, b))
    graph = build_graph(edges, range(1, n + 1))
    return graph, Matching(graph, matched, maximal=True)
