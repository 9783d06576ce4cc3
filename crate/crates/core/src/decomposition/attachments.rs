use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::{Attachment, BasilicaPoset, FactorComponent, KotzigLovaszClass};

/// The union of the vertex sets of the strict upper bounds of `component`.
pub fn upper_vertices(
    graph: &Graph,
    components: &[FactorComponent],
    poset: &BasilicaPoset,
    component: usize,
) -> VertexSet {
    let mut out = VertexSet::new(graph.vertex_count());
    for c in poset.strict_upper_set(component) {
        out.union_with(&components[c].vertices);
    }
    out
}

/// For every component `H` and every connected component `K` of
/// `G[vup(H)]`, the class of `H` that contains all neighbours of `K` in `H`.
///
/// A `K` whose neighbourhood in `H` is empty or meets two classes is an
/// invariant violation and is reported as an error.
pub fn attachments(
    graph: &Graph,
    components: &[FactorComponent],
    classes: &[KotzigLovaszClass],
    poset: &BasilicaPoset,
) -> Result<Vec<Attachment>> {
    let mut class_of = vec![usize::MAX; graph.vertex_count()];
    for (i, class) in classes.iter().enumerate() {
        for v in class.vertices.iter() {
            class_of[v.index()] = i;
        }
    }
    let mut out = Vec::new();
    for h in components {
        let vup = upper_vertices(graph, components, poset, h.id);
        if vup.is_empty() {
            continue;
        }
        for k in graph.components_within(&vup) {
            let touching = graph.neighborhood(&k).intersection(&h.vertices);
            let mut ids = touching.iter().map(|v| class_of[v.index()]);
            let class = ids.next().ok_or_else(|| {
                Error::Invariant(format!(
                    "a component of the upper bounds of {} has no neighbour in it",
                    h.id
                ))
            })?;
            if ids.any(|c| c != class) {
                return Err(Error::Invariant(format!(
                    "neighbours of an upper-bound component of {} span two classes",
                    h.id
                )));
            }
            out.push(Attachment {
                lower: h.id,
                up_component: k,
                class,
            });
        }
    }
    Ok(out)
}
