//! File formats and JSON reports behind the `packcolor` binary.

pub mod formats;
pub mod report;

pub use formats::{
    parse_coloring, parse_edge_list, parse_graph, parse_graph6, write_coloring, write_edge_list, write_graph,
    write_graph6, Format, ParseError,
};
pub use report::{coloring_payload, graph_summary, Report};
