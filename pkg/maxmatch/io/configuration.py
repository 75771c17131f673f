"""Text dump of configurations, one node per line.

Each line reads ``id role m p alpha beta s end`` with '-' for None and 1/0
for booleans. The fields alpha, beta and s of a single node are '-'.
"""

from typing import List, Optional

from ..graph import Matching
from ..protocol.state import Configuration, MatchedState, SingleState
from ..utils._checks import _check_type


def _pointer(value: Optional[int]) -> str:
    return "-" if value is None else str(value)


def dump_configuration(configuration: Configuration) -> str:
    """Dump a configuration to text.

    Parameters
    ----------
    configuration : Configuration
        The configuration to dump.

    Returns
    -------
    text : str
        One line per node in ascending node order, with a trailing newline.
    """
    _check_type(configuration, (Configuration,), "configuration")
    lines: List[str] = list()
    for u, state in configuration.items():
        partner = configuration.matching.partner(u)
        if isinstance(state, MatchedState):
            fields = (
                str(u),
                "matched",
                _pointer(partner),
                _pointer(state.p),
                _pointer(state.alpha),
                _pointer(state.beta),
                str(int(state.s)),
                str(int(state.end)),
            )
        else:
            fields = (str(u), "single", "-", _pointer(state.p), "-", "-", "-")
            fields += (str(int(state.end)),)
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"


def parse_configuration(text: str, matching: Matching) -> Configuration:
    """Parse a configuration dumped by dump_configuration.

    Parameters
    ----------
    text : str
        The dump. Blank lines and lines starting with '#' are ignored.
    matching : Matching
        The underlying matching, whose roles and partners the dump must agree
        with.

    Returns
    -------
    configuration : Configuration
        The parsed configuration.
    """
    _check_type(text, (str,), "text")
    _check_type(matching, (Matching,), "matching")

    def pointer(value: str, lineno: int) -> Optional[int]:
        if value == "-":
            return None
        try:
            return int(value)
        except ValueError:
            raise ValueError(f"Line {lineno}: invalid pointer '{value}'.")

    def boolean(value: str, lineno: int) -> bool:
        if value not in ("0", "1"):
            raise ValueError(f"Line {lineno}: invalid boolean '{value}'.")
        return value == "1"

    states = dict()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 8:
            raise ValueError(
                f"Line {lineno}: expected 8 fields 'id role m p alpha beta s end', "
                f"got {len(fields)}."
            )
        u = pointer(fields[0], lineno)
        if u is None or u not in matching.graph:
            raise ValueError(f"Line {lineno}: unknown node '{fields[0]}'.")
        if u in states:
            raise ValueError(f"Line {lineno}: node {u} is listed twice.")
        role = fields[1]
        expected = "matched" if matching.is_matched(u) else "single"
        if role != expected:
            raise ValueError(
                f"Line {lineno}: node {u} is {expected} in the matching, the dump "
                f"says '{role}'."
            )
        if pointer(fields[2], lineno) != matching.partner(u):
            raise ValueError(
                f"Line {lineno}: node {u} has partner {matching.partner(u)} in the "
                f"matching, the dump says '{fields[2]}'."
            )
        if role == "matched":
            states[u] = MatchedState(
                pointer(fields[3], lineno),
                pointer(fields[4], lineno),
                pointer(fields[5], lineno),
                boolean(fields[6], lineno),
                boolean(fields[7], lineno),
            )
        else:
            if fields[4:7] != ["-", "-", "-"]:
                raise ValueError(
                    f"Line {lineno}: the single node {u} has no alpha, beta or s."
                )
            states[u] = SingleState(
                pointer(fields[3], lineno), boolean(fields[7], lineno)
            )
    return Configuration(matching, states)
