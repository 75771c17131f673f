"""Fill docstrings to avoid redundant docstrings in multiple files.

Inspired from mne: https://mne.tools/stable/index.html
Inspired from mne.utils.docs.py by Eric Larson <larson.eric.d@gmail.com>
"""

import sys
from typing import Callable, List

# ------------------------- Documentation dictionary -------------------------
docdict = dict()

# ------------------------------------ graph ---------------------------------
docdict[
    "graph"
] = """
graph : Graph
    Simple undirected graph with totally ordered integer node identifiers."""
docdict[
    "matching"
] = """
matching : Matching
    The fixed underlying maximal matching M, bound to its graph."""
docdict[
    "edges"
] = """
edges : iterable of tuple of int
    Undirected edges given as pairs of node identifiers."""

# ---------------------------------- protocol --------------------------------
docdict[
    "configuration"
] = """
configuration : Configuration
    Immutable snapshot of the protocol variables of every node."""
docdict[
    "matched_node"
] = """
u : int
    Identifier of a node in matched(V)."""
docdict[
    "node"
] = """
u : int
    Identifier of a node of the graph."""

# ----------------------------------- daemon ---------------------------------
docdict[
    "strategy"
] = """
strategy : DaemonStrategy
    The daemon choosing, at each transition, the nonempty set of eligible
    nodes to activate."""
docdict[
    "seed"
] = """
seed : int | None
    Seed of the numpy random generator. None is equivalent to 0, the
    environment is never used as a source of entropy."""
docdict[
    "move_limit"
] = """
move_limit : int | None
    Maximum number of moves. The execution is reported as exceeding the
    limit once the cumulative move count is above this value. If None, the
    total-move bound of the instance plus one is used."""
docdict[
    "trace"
] = """
trace : Trace
    Recorded execution."""
docdict[
    "stats"
] = """
stats : MoveStats
    Per-node and per-rule move counters of an execution."""
docdict[
    "bounds"
] = """
bounds : MoveBounds
    Closed-form move bounds of the instance."""

# ----------------------------------- oracle ---------------------------------
docdict[
    "exact_cap"
] = """
exact_cap : int
    Largest number of nodes for which the exhaustive maximum-matching solver
    is run."""
docdict[
    "report_return"
] = """
report : VerificationReport
    The named checks with their status and witness."""

# ------------------------------- model checker ------------------------------
docdict[
    "pointer_domain"
] = """
pointer_domain : str
    Values enumerated for the pointer variables: ``'neighbors'`` (N(u) and
    null), ``'neighbors_plus_foreign'`` (additionally one fixed
    non-neighbor identifier) or ``'valid_plus_corrupt'`` (the legal targets,
    null and one representative illegal identifier)."""
docdict[
    "transition_cap"
] = """
transition_cap : int
    Refuse the computation if the estimated number of transitions is above
    this cap."""

# ----------------------------------- logging --------------------------------
docdict[
    "verbose"
] = """
verbose : int | str | bool | None
    Sets the verbosity level for the duration of the call. The verbosity
    increases gradually between ``"CRITICAL"``, ``"ERROR"``, ``"WARNING"``,
    ``"INFO"`` and ``"DEBUG"``. If None is provided, the verbosity is left
    unchanged."""

# ------------------------- Documentation functions --------------------------
docdict_indented = dict()


def fill_doc(f: Callable) -> Callable:
    """Fill a docstring with docdict entries.

    Parameters
    ----------
    f : callable
        The function to fill the docstring of (modified in place).

    Returns
    -------
    f : callable
        The function, potentially with an updated __doc__.
    """
    docstring = f.__doc__
    if not docstring:
        return f

    lines = docstring.splitlines()
    indent_count = _indentcount_lines(lines)

    try:
        indented = docdict_indented[indent_count]
    except KeyError:
        indent = " " * indent_count
        docdict_indented[indent_count] = indented = dict()

        for name, docstr in docdict.items():
            lines = [
                indent + line if k != 0 else line
                for k, line in enumerate(docstr.strip().splitlines())
            ]
            indented[name] = "\n".join(lines)

    try:
        f.__doc__ = docstring % indented
    except (TypeError, ValueError, KeyError) as exp:
        funcname = f.__name__
        funcname = docstring.split("\n")[0] if funcname is None else funcname
        raise RuntimeError(f"Error documenting {funcname}:\n{str(exp)}")

    return f


def _indentcount_lines(lines: List[str]) -> int:
    """Minimum indent for all lines in line list.

    >>> lines = [' one', '  two', '   three']
    >>> _indentcount_lines(lines)
    1
    >>> lines = []
    >>> _indentcount_lines(lines)
    0
    >>> lines = [' one']
    >>> _indentcount_lines(lines)
    1
    >>> _indentcount_lines(['    '])
    0
    """
    indent = sys.maxsize
    for k, line in enumerate(lines):
        if k == 0:
            continue
        line_stripped = line.lstrip()
        if line_stripped:
            indent = min(indent, len(line) - len(line_stripped))
    if indent == sys.maxsize:
        return 0
    return indent


def copy_doc(source: Callable) -> Callable:
    """Copy the docstring from another function (decorator).

    The docstring of the source function is prepended to the docstring of the
    function wrapped by this decorator. Used by the daemon strategies to
    inherit the documentation of DaemonStrategy.select.

    Parameters
    ----------
    source : callable
        The function to copy the docstring from.

    Returns
    -------
    wrapper : callable
        The decorated function.
    """

    def wrapper(func):
        if source.__doc__ is None or len(source.__doc__) == 0:
            raise RuntimeError(
                f"The docstring from {source.__name__} could not be copied "
                "because it was empty."
            )
        doc = source.__doc__
        if func.__doc__ is not None:
            doc += func.__doc__
        func.__doc__ = doc
        return func

    return wrapper
