// Reading edge-list and DIMACS text, writing JSON and Graphviz DOT.
//
// ```text
// cargo run --example export_formats
// cargo run --example export_formats | dot -Tsvg > basilica.svg
// ```

use basilica::decompose;
use basilica::io::{emit_dot, emit_json, parse_dimacs, parse_edge_list};

const HOUSE: &str = "\
# triangle b-p-q with two pendant vertices
a b
b c
b p
p q
q b
";

const KITE: &str = "\
c kite: one edge seeing both ends of another
p edge 4 4
e 1 2
e 3 4
e 1 3
e 1 4
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let house = decompose(&parse_edge_list(HOUSE)?)?;
    let json = emit_json(&house);
    eprintln!("{json}");
    assert!(json.contains("\"hasse_edges\""));

    let kite = decompose(&parse_dimacs(KITE)?)?;
    let dot = emit_dot(&kite);
    println!("{dot}");
    assert!(dot.contains("->"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
