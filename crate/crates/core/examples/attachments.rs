// How the parts above a factor-component attach to its classes.
//
// ```text
// cargo run --example attachments
// ```

use basilica::{decompose, Graph, VertexSet};

fn show(g: &Graph, s: &VertexSet) -> String {
    let mut names: Vec<&str> = s.iter().map(|v| g.label(v)).collect();
    names.sort_unstable();
    format!("{{{}}}", names.join(", "))
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // A 4-cycle h1..h4 with two triangles-on-a-stick hanging above it, one
    // through each colour class.
    let g = Graph::from_labeled_edges([
        ("h1", "h2"),
        ("h2", "h3"),
        ("h3", "h4"),
        ("h4", "h1"),
        ("p1", "p2"),
        ("h1", "p1"),
        ("h1", "p2"),
        ("q1", "q2"),
        ("h2", "q1"),
        ("h2", "q2"),
    ])?;
    let d = decompose(&g)?;
    let base = d.component_of(g.vertex_by_label("h1").unwrap());
    println!("classes of {}:", show(&g, &d.components[base].vertices));
    for class in d.classes_of_component(base) {
        println!("  {}", show(&g, &class.vertices));
    }
    println!("vertices above: {}", show(&g, &d.upper_vertices(base)));
    for a in d.attachments_of(base) {
        println!(
            "  {} attaches to {}",
            show(&g, &a.up_component),
            show(&g, &d.classes[a.class].vertices)
        );
    }
    assert_eq!(d.attachments_of(base).count(), 2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
