// The Kotzig-Lovász partition: vertices whose joint removal raises the
// deficiency are grouped together.
//
// ```text
// cargo run --example kotzig_lovasz
// ```

use basilica::{decompose, Graph};

fn classes(name: &str, g: &Graph) -> Result<usize, Box<dyn std::error::Error>> {
    let d = decompose(g)?;
    let rendered: Vec<String> = d
        .classes
        .iter()
        .map(|c| {
            let names: Vec<&str> = c.vertices.iter().map(|v| g.label(v)).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    println!("{name}: {}", rendered.join(" "));
    Ok(d.classes.len())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Even cycles split into the two colour classes.
    let c6 = Graph::from_edges(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>())?;
    assert_eq!(classes("C6", &c6)?, 2);

    // In complete graphs every class is a singleton.
    let k4 = Graph::from_labeled_edges([
        ("a", "b"),
        ("a", "c"),
        ("a", "d"),
        ("b", "c"),
        ("b", "d"),
        ("c", "d"),
    ])?;
    assert_eq!(classes("K4", &k4)?, 4);

    // On a path with an odd number of vertices the A-vertices form a class
    // and every D-vertex stands alone.
    let p5 = Graph::from_labeled_edges([("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")])?;
    assert_eq!(classes("P5", &p5)?, 4);

    // The 3-cube is bipartite and matching covered, so again two classes.
    let cube: Vec<(usize, usize)> = (0..8usize)
        .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
        .filter(|&(u, v)| u < v)
        .collect();
    assert_eq!(classes("Q3", &Graph::from_edges(8, &cube)?)?, 2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
