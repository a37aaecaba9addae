"""Serialization of szl artifacts."""

from .artifacts import (
    action_csv,
    cmv_csv,
    distribution_csv,
    dump_action,
    dump_aggregated_basis,
    dump_chain,
    dump_graph,
    dump_linking,
    dump_matrix,
    dump_partition,
    dump_report,
    dump_state,
    dump_time_series,
    dump_verblunsky,
    linking_csv,
    load_graph,
    load_linking,
    load_matrix,
    load_partition,
    load_state,
    load_verblunsky,
    matrix_csv,
    parse_chain,
    parse_graph,
    parse_linking,
    parse_matrix,
    parse_partition,
    parse_state,
    parse_verblunsky,
    read_json,
    render_csv,
    render_json,
    time_series_csv,
    write_json,
    write_text,
)

__all__ = [
    "action_csv",
    "cmv_csv",
    "distribution_csv",
    "dump_action",
    "dump_aggregated_basis",
    "dump_chain",
    "dump_graph",
    "dump_linking",
    "dump_matrix",
    "dump_partition",
    "dump_report",
    "dump_state",
    "dump_time_series",
    "dump_verblunsky",
    "linking_csv",
    "load_graph",
    "load_linking",
    "load_matrix",
    "load_partition",
    "load_state",
    "load_verblunsky",
    "matrix_csv",
    "parse_chain",
    "parse_graph",
    "parse_linking",
    "parse_matrix",
    "parse_partition",
    "parse_state",
    "parse_verblunsky",
    "read_json",
    "render_csv",
    "render_json",
    "time_series_csv",
    "write_json",
    "write_text",
]
