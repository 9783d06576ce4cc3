//! Cross-checks a computed decomposition against the exhaustive oracle.

use crate::decomposition::BasilicaDecomposition;
use crate::error::Result;
use crate::graph::VertexSet;
use crate::matching;
use crate::oracle::{Oracle, DEFAULT_LIMIT};

/// One disagreement between the fast pipeline and the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub check: &'static str,
    pub detail: String,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

pub fn cross_check(d: &BasilicaDecomposition) -> Result<Vec<Mismatch>> {
    cross_check_with_limit(d, DEFAULT_LIMIT)
}

/// Compares matching size, the Gallai-Edmonds family, allowed edges,
/// factor-components with their flags, the Kotzig-Lovász classes and the
/// full order relation. An empty result means full agreement.
pub fn cross_check_with_limit(d: &BasilicaDecomposition, limit: usize) -> Result<Vec<Mismatch>> {
    let g = &d.graph;
    let oracle = Oracle::with_limit(g, limit)?;
    let mut out = Vec::new();
    let mut report = |check: &'static str, detail: String| out.push(Mismatch { check, detail });
    let show = |set: &VertexSet| {
        let names: Vec<&str> = set.iter().map(|v| g.label(v)).collect();
        format!("{{{}}}", names.join(","))
    };

    if d.matching.size() != oracle.nu() {
        report(
            "matching",
            format!(
                "size {} but the maximum is {}",
                d.matching.size(),
                oracle.nu()
            ),
        );
    }

    let expected = oracle.gallai_edmonds();
    for (name, got, want) in [
        ("D", &d.family.d, &expected.d),
        ("A", &d.family.a, &expected.a),
        ("C", &d.family.c, &expected.c),
    ] {
        if got != want {
            report(
                "gallai_edmonds",
                format!("{name} = {} but expected {}", show(got), show(want)),
            );
        }
    }

    match matching::allowed_edges(g, &d.matching, &d.family) {
        Ok(allowed) => {
            if allowed != oracle.allowed_edges() {
                report(
                    "allowed_edges",
                    format!(
                        "{} computed, {} expected",
                        allowed.len(),
                        oracle.allowed_edges().len()
                    ),
                );
            }
        }
        Err(e) => report("allowed_edges", e.to_string()),
    }

    let expected = oracle.factor_components();
    let got: Vec<(VertexSet, bool)> = d
        .components
        .iter()
        .map(|c| (c.vertices.clone(), c.consistent))
        .collect();
    let want: Vec<(VertexSet, bool)> = expected
        .iter()
        .map(|c| (c.vertices.clone(), c.consistent))
        .collect();
    let components_agree = got == want;
    if !components_agree {
        let render = |list: &[(VertexSet, bool)]| {
            list.iter()
                .map(|(s, c)| format!("{}{}", show(s), if *c { "" } else { "*" }))
                .collect::<Vec<_>>()
                .join(" ")
        };
        report(
            "components",
            format!("computed {} but expected {}", render(&got), render(&want)),
        );
    }

    let mut got: Vec<VertexSet> = d.classes.iter().map(|c| c.vertices.clone()).collect();
    got.sort_by_key(|s| s.first());
    let want = oracle.classes();
    if got != want {
        let render = |list: &[VertexSet]| list.iter().map(&show).collect::<Vec<_>>().join(" ");
        report(
            "classes",
            format!("computed {} but expected {}", render(&got), render(&want)),
        );
    }

    if components_agree {
        let k = d.components.len();
        for a in 0..k {
            for b in 0..k {
                let (fast, slow) = (d.poset.leq(a, b), oracle.order(a, b));
                if fast != slow {
                    report(
                        "order",
                        format!(
                            "{} <= {} is {} but expected {}",
                            show(&d.components[a].vertices),
                            show(&d.components[b].vertices),
                            fast,
                            slow
                        ),
                    );
                }
            }
        }
    }
    Ok(out)
}
