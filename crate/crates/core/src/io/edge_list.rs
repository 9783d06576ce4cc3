use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Parses whitespace-separated `u v` lines.
///
/// Blank lines and lines starting with `#` are skipped; `vertex u` declares
/// an isolated vertex. Vertex indices follow first appearance.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut builder = GraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertex", u] => {
                builder.add_vertex(u);
            }
            [u, v] => builder.add_edge(u, v).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?,
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v` or `vertex u`, found `{trimmed}`"),
                })
            }
        }
    }
    Ok(builder.build())
}
