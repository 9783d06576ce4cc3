// Maximum matchings with blossom shrinking.
//
// ```text
// cargo run --example maximum_matching
// ```

use basilica::matching::deficiency;
use basilica::{maximum_matching, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // The Petersen graph has a perfect matching; finding it from a greedy
    // start needs a search through odd cycles.
    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ],
    )?;
    let m = maximum_matching(&petersen);
    println!("Petersen: {} edges matched", m.size());
    for (u, v) in m.edges() {
        println!("  {} - {}", petersen.label(u), petersen.label(v));
    }
    assert_eq!(m.size(), 5);

    // Odd cycles always leave one vertex exposed.
    let c7 = Graph::from_edges(7, &(0..7).map(|i| (i, (i + 1) % 7)).collect::<Vec<_>>())?;
    let m = maximum_matching(&c7);
    let exposed: Vec<&str> = m.exposed().iter().map(|v| c7.label(v)).collect();
    println!(
        "C7: size {}, deficiency {}, exposed {:?}",
        m.size(),
        deficiency(&c7, &m),
        exposed
    );
    assert_eq!(deficiency(&c7, &m), 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
