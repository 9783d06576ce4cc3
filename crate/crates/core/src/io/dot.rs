use std::fmt::Write;

use crate::decomposition::BasilicaDecomposition;
use crate::graph::{Graph, VertexSet};

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            _ => out.push(ch),
        }
    }
    out
}

fn braced(graph: &Graph, set: &VertexSet) -> String {
    let mut names: Vec<&str> = set.iter().map(|v| graph.label(v)).collect();
    names.sort_unstable();
    format!("{{{}}}", names.join(", "))
}

/// Graphviz rendering of the basilica structure: one box per
/// factor-component, one arrow per covering pair, labelled with the class
/// the upper part attaches to.
pub fn emit_dot(d: &BasilicaDecomposition) -> String {
    let g = &d.graph;
    let mut out = String::from("digraph basilica {\n    rankdir=BT;\n    node [shape=box];\n");
    for c in &d.components {
        let flag = if c.consistent {
            "consistent"
        } else {
            "inconsistent"
        };
        let label = format!("{}\n{}", braced(g, &c.vertices), flag);
        let style = if c.consistent { "" } else { ", style=dashed" };
        let _ = writeln!(
            out,
            "    h{} [label=\"{}\"{}];",
            c.id,
            escape(&label),
            style
        );
    }
    for &(lower, upper) in d.poset.hasse_edges() {
        match d.attachment_between(lower, upper) {
            Some(a) => {
                let class = braced(g, &d.classes[a.class].vertices);
                let _ = writeln!(
                    out,
                    "    h{lower} -> h{upper} [label=\"{}\"];",
                    escape(&class)
                );
            }
            None => {
                let _ = writeln!(out, "    h{lower} -> h{upper};");
            }
        }
    }
    out.push_str("}\n");
    out
}
