// Checking a decomposition against exhaustive search.
//
// ```text
// cargo run --example oracle_cross_check
// ```

use basilica::oracle::{is_factor_critical, Oracle};
use basilica::{decompose, verify, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Graph::from_labeled_edges([
        ("a", "b"),
        ("b", "c"),
        ("c", "a"),
        ("c", "d"),
        ("d", "e"),
        ("e", "f"),
        ("f", "d"),
        ("f", "g"),
        ("g", "h"),
    ])?;
    let d = decompose(&g)?;
    let mismatches = verify::cross_check(&d)?;
    println!("{} mismatches against the oracle", mismatches.len());
    assert!(mismatches.is_empty());

    let oracle = Oracle::new(&g)?;
    let report = oracle.report();
    println!(
        "nu = {}, {} maximum matchings",
        report.nu,
        oracle.enumerate_maximum_matchings().len()
    );
    println!(
        "{} allowed edges, {} components",
        report.allowed_edges.len(),
        report.components.len()
    );
    for (i, c) in report.components.iter().enumerate() {
        let kind = if c.consistent {
            "consistent"
        } else {
            "inconsistent"
        };
        let sets = oracle.critical_inducing_sets(i).len();
        println!("component {i} ({kind}): {sets} critical-inducing sets");
    }

    let triangle = Graph::from_labeled_edges([("a", "b"), ("b", "c"), ("c", "a")])?;
    println!(
        "triangle factor-critical: {}",
        is_factor_critical(&triangle)?
    );

    // Exhaustive search is guarded.
    let big = Graph::empty(40);
    println!("40 vertices: {}", Oracle::new(&big).err().unwrap());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
