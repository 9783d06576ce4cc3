//! Text formats: edge-list and DIMACS input, JSON and DOT output.

mod dimacs;
mod dot;
mod edge_list;
mod json;

pub use dimacs::parse_dimacs;
pub use dot::emit_dot;
pub use edge_list::parse_edge_list;
pub use json::{emit_json, to_document, JsonDocument};
