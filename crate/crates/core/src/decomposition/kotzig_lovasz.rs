use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching::{saturated_reach_with, Forest, GallaiEdmondsFamily, Matching};

use super::{FactorComponent, KotzigLovaszClass};

/// The generalized Kotzig-Lovász partition, component by component.
///
/// An inconsistent component splits into `A ∩ V(H)` (when nonempty) and one
/// singleton per vertex of `D ∩ V(H)`. In a consistent component the class
/// of `v` is `V(H)` minus the vertices saturated-reachable from `v`; the
/// least uncovered vertex is taken as the next representative, so a
/// component with `k` classes costs `k` searches.
///
/// Classes are listed by component id, then by least vertex.
pub fn kotzig_lovasz(
    graph: &Graph,
    matching: &Matching,
    family: &GallaiEdmondsFamily,
    components: &[FactorComponent],
) -> Result<Vec<KotzigLovaszClass>> {
    let n = graph.vertex_count();
    let mut mates = matching.to_mates();
    let mut forest = Forest::new(graph);
    let mut classes = Vec::new();
    for component in components {
        let mut local: Vec<VertexSet> = Vec::new();
        if component.consistent {
            let mut uncovered = component.vertices.clone();
            while let Some(rep) = uncovered.first() {
                let reach = saturated_reach_with(&mut forest, graph, &mut mates, rep)?;
                let class = component.vertices.difference(&reach);
                if !class.is_subset(&uncovered) || !class.contains(rep) {
                    return Err(Error::Invariant(format!(
                        "class of vertex {} overlaps an earlier class",
                        graph.label(rep)
                    )));
                }
                uncovered.difference_with(&class);
                local.push(class);
            }
        } else {
            let a_part = component.vertices.intersection(&family.a);
            if !a_part.is_empty() {
                local.push(a_part);
            }
            for v in component.vertices.intersection(&family.d).iter() {
                local.push(VertexSet::from_vertices(n, [v]));
            }
            local.sort_by_key(VertexSet::first);
        }
        classes.extend(local.into_iter().map(|vertices| KotzigLovaszClass {
            component: component.id,
            vertices,
        }));
    }
    Ok(classes)
}
