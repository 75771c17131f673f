"""Line-delimited traces and delimited tables with a provenance header."""

import json
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Union

import pandas as pd

from ..daemon.bounds import MoveBounds
from ..daemon.engine import MoveStats, Trace
from ..oracle.report import VerificationReport
from ..utils._checks import _check_type
from ..utils._docs import fill_doc
from .configuration import dump_configuration


def _provenance_lines(provenance: Optional[Mapping[str, object]]) -> List[str]:
    if provenance is None:
        return list()
    return [f"# {key}: {value}" for key, value in sorted(provenance.items())]


@fill_doc
def write_trace(
    trace: Trace,
    fname: Union[str, Path],
    provenance: Optional[Mapping[str, object]] = None,
) -> None:
    """Write a trace as JSON lines.

    The first record is the header: provenance, outcome and the dump of the
    initial configuration. Each following record is one transition with its
    index, the activated (node, rule) pairs and the cumulative move count.
    Keys are sorted and no wall-clock data is written: re-running an execution
    reproduces the file byte for byte.

    Parameters
    ----------
    %(trace)s
    fname : str | Path
        Path to the output file.
    provenance : dict | None
        Additional header fields, e.g. the experiment hash.
    """
    _check_type(trace, (Trace,), "trace")
    _check_type(fname, ("path-like",), "fname")
    header = dict(trace.header)
    header.update(provenance or dict())
    header.update(
        record="header",
        outcome=str(trace.outcome),
        initial=dump_configuration(trace.initial).splitlines(),
    )
    with open(fname, "w", encoding="utf-8") as file:
        file.write(json.dumps(header, sort_keys=True) + "\n")
        for elt in trace.steps:
            record = dict(
                record="step",
                index=elt.index,
                activations=[[u, str(rule)] for u, rule in elt.activations.items()],
                moves=elt.moves,
            )
            file.write(json.dumps(record, sort_keys=True) + "\n")


def read_activations(fname: Union[str, Path]) -> List[List[int]]:
    """Read the activation sets of a trace written by write_trace.

    Parameters
    ----------
    fname : str | Path
        Path to the trace.

    Returns
    -------
    activations : list of list of int
        One list of activated nodes per transition, to be replayed.
    """
    _check_type(fname, ("path-like",), "fname")
    activations = list()
    with open(fname, encoding="utf-8") as file:
        for lineno, line in enumerate(file, start=1):
            try:
                record = json.loads(line)
            except json.JSONDecodeError as error:
                raise ValueError(f"Line {lineno} of '{fname}' is not JSON: {error}.")
            if record.get("record") == "step":
                activations.append([int(u) for u, _ in record["activations"]])
    return activations


def write_table(
    table: pd.DataFrame,
    fname: Union[str, Path],
    provenance: Optional[Mapping[str, object]] = None,
) -> None:
    """Write a table as CSV below '#'-prefixed provenance lines.

    Parameters
    ----------
    table : DataFrame
        The table to write.
    fname : str | Path
        Path to the output file.
    provenance : dict | None
        Provenance fields, one '# key: value' line each.
    """
    _check_type(table, (pd.DataFrame,), "table")
    _check_type(fname, ("path-like",), "fname")
    with open(fname, "w", encoding="utf-8", newline="") as file:
        for line in _provenance_lines(provenance):
            file.write(line + "\n")
        table.to_csv(file, index=False, lineterminator="\n")


def read_table(fname: Union[str, Path]) -> pd.DataFrame:
    """Read a table written by write_table, skipping the provenance lines."""
    _check_type(fname, ("path-like",), "fname")
    return pd.read_csv(fname, comment="#")


def stats_summary(
    stats: MoveStats, bounds: MoveBounds, report: VerificationReport
) -> Dict[str, object]:
    """One-row summary: μ, σ, Δ, per-rule totals, bounds and check flags."""
    summary: Dict[str, object] = dict(bounds.as_dict())
    for rule, n in stats.rule_totals().items():
        summary[f"moves_{rule.value}"] = n
    summary["moves_matched"] = stats.matched_moves
    summary["moves_total"] = stats.total_moves
    summary["single_end_flips"] = sum(stats.end_flips.values())
    summary["single_true_writes"] = stats.single_true_writes
    for check in report:
        summary[f"check_{check.name}"] = check.status
    summary["passed"] = report.passed
    return summary


@fill_doc
def write_stats(
    stats: MoveStats,
    bounds: MoveBounds,
    report: VerificationReport,
    fname: Union[str, Path],
    provenance: Optional[Mapping[str, object]] = None,
) -> None:
    """Write the one-row stats summary of an execution.

    Parameters
    ----------
    %(stats)s
    %(bounds)s
    report : VerificationReport
        The checks whose status is reported in the 'check_*' columns.
    fname : str | Path
        Path to the output file.
    provenance : dict | None
        Provenance fields.
    """
    summary = stats_summary(stats, bounds, report)
    write_table(pd.DataFrame([summary]), fname, provenance)


def write_report(
    report: VerificationReport,
    fname: Union[str, Path],
    provenance: Optional[Mapping[str, object]] = None,
) -> None:
    """Write a report as a (check, status, witness) table."""
    _check_type(report, (VerificationReport,), "report")
    write_table(report.to_frame(), fname, provenance)
