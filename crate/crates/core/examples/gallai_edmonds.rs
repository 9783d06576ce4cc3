// The Gallai-Edmonds family and the alternating-path queries behind it.
//
// ```text
// cargo run --example gallai_edmonds
// ```

use basilica::matching::{root_component, saturated_reach};
use basilica::{gallai_edmonds, maximum_matching, Graph, VertexSet};

fn show(g: &Graph, s: &VertexSet) -> String {
    let names: Vec<&str> = s.iter().map(|v| g.label(v)).collect();
    format!("{{{}}}", names.join(", "))
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // A triangle b-p-q with pendant vertices a and c hanging off b.
    let g =
        Graph::from_labeled_edges([("a", "b"), ("b", "c"), ("b", "p"), ("p", "q"), ("q", "b")])?;
    let m = maximum_matching(&g);
    let family = gallai_edmonds(&g, &m)?;
    println!("D = {}", show(&g, &family.d));
    println!("A = {}", show(&g, &family.a));
    println!("C = {}", show(&g, &family.c));
    println!("deficiency = {}", family.deficiency);
    assert_eq!(family.a.len(), 1);

    // Every exposed vertex roots one component of G[D].
    for r in m.exposed().iter() {
        println!(
            "component of G[D] at {}: {}",
            g.label(r),
            show(&g, &root_component(&g, &m, r)?)
        );
    }

    // Vertices joined to p by a path that starts and ends with matched edges.
    let p = g.vertex_by_label("p").unwrap();
    println!(
        "saturated reach of p: {}",
        show(&g, &saturated_reach(&g, &m, p)?)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
