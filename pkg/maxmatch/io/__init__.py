"""Readers and writers of graphs, configurations, traces and tables."""

from .configuration import dump_configuration, parse_configuration  # noqa: F401
from .export import (  # noqa: F401
    read_activations,
    read_table,
    write_report,
    write_stats,
    write_table,
    write_trace,
)
from .graph import read_graph, write_graph  # noqa: F401
