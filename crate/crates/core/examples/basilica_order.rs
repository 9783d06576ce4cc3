// The partial order on factor-components and its Hasse diagram.
//
// ```text
// cargo run --example basilica_order
// ```

use basilica::{decompose, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Three matched pairs with a unique perfect matching. Each pair sees
    // both ends of the next one through a single vertex, which stacks them
    // into a chain.
    let g = Graph::from_labeled_edges([
        ("a", "b"),
        ("c", "d"),
        ("e", "f"),
        ("a", "c"),
        ("a", "d"),
        ("c", "e"),
        ("c", "f"),
    ])?;
    let d = decompose(&g)?;
    for c in &d.components {
        let names: Vec<&str> = c.vertices.iter().map(|v| g.label(v)).collect();
        let above: Vec<usize> = d.poset.strict_upper_set(c.id).collect();
        println!("component {} {:?}: strictly below {:?}", c.id, names, above);
    }
    println!("Hasse diagram: {:?}", d.poset.hasse_edges());
    assert_eq!(d.poset.hasse_edges().len(), 2);

    let lowest = d.component_of(g.vertex_by_label("a").unwrap());
    let highest = d.component_of(g.vertex_by_label("e").unwrap());
    assert!(d.poset.leq(lowest, highest));
    assert!(d.poset.is_minimal(lowest) && d.poset.is_maximal(highest));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
