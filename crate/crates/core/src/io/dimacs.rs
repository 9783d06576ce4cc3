use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_count(line: usize, token: Option<&str>, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_error(line, format!("invalid {what} `{token}`")))
}

/// Parses the DIMACS edge format: `c` comment lines, one `p edge n m`
/// header, then `e u v` lines with 1-based vertices. Vertex `i` gets the
/// label `i`. The edge count in the header is not enforced.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut builder: Option<GraphBuilder> = None;
    let mut n = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => {}
            Some("p") => {
                if builder.is_some() {
                    return Err(parse_error(line, "duplicate problem line"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(parse_error(
                            line,
                            format!("expected `p edge`, found format {:?}", other.unwrap_or("")),
                        ))
                    }
                }
                n = parse_count(line, tokens.next(), "vertex count")?;
                parse_count(line, tokens.next(), "edge count")?;
                let mut b = GraphBuilder::new();
                for v in 1..=n {
                    b.add_vertex(&v.to_string());
                }
                builder = Some(b);
            }
            Some("e") => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| parse_error(line, "edge before `p edge` header"))?;
                let u = parse_count(line, tokens.next(), "endpoint")?;
                let v = parse_count(line, tokens.next(), "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_error(line, format!("vertex {x} outside 1..={n}")));
                    }
                }
                b.add_edge(&u.to_string(), &v.to_string())
                    .map_err(|e| parse_error(line, e.to_string()))?;
            }
            Some(other) => {
                return Err(parse_error(line, format!("unknown line type `{other}`")));
            }
        }
    }
    builder
        .map(GraphBuilder::build)
        .ok_or_else(|| parse_error(text.lines().count().max(1), "missing `p edge` header"))
}
