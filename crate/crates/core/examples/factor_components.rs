// Allowed edges and factor-components.
//
// ```text
// cargo run --example factor_components
// ```

use basilica::decomposition::factor_components;
use basilica::matching::allowed_edges;
use basilica::{gallai_edmonds, maximum_matching, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Two 4-cycles joined by a bridge-like pair of edges, plus a pendant
    // path that makes part of the graph deficient.
    let g = Graph::from_labeled_edges([
        ("a1", "a2"),
        ("a2", "a3"),
        ("a3", "a4"),
        ("a4", "a1"),
        ("b1", "b2"),
        ("b2", "b3"),
        ("b3", "b4"),
        ("b4", "b1"),
        ("a1", "b1"),
        ("a3", "b3"),
        ("a2", "x"),
        ("x", "y"),
        ("x", "z"),
    ])?;
    let m = maximum_matching(&g);
    let family = gallai_edmonds(&g, &m)?;

    let allowed = allowed_edges(&g, &m, &family)?;
    println!("{} of {} edges are allowed:", allowed.len(), g.edge_count());
    for (u, v) in &allowed {
        println!("  {} - {}", g.label(*u), g.label(*v));
    }

    for c in factor_components(&g, &m, &family)? {
        let mut names: Vec<&str> = c.vertices.iter().map(|v| g.label(v)).collect();
        names.sort_unstable();
        let kind = if c.consistent {
            "consistent"
        } else {
            "inconsistent"
        };
        println!("component {}: {:?} ({kind})", c.id, names);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
