use std::collections::VecDeque;

use crate::error::Result;
use crate::graph::{Graph, VertexId, VertexSet};
use crate::matching::{saturated_reach_with, Forest, GallaiEdmondsFamily, Matching};

use super::FactorComponent;

/// Splits `V(G)` into factor-components.
///
/// Inconsistent components are the connected components of `G[D ∪ A]`
/// after deleting the edges inside `A`. Consistent components are the
/// components of the allowed-edge subgraph of `G[C]`, where a non-matching
/// edge `uv` is allowed exactly when `v` is saturated-reachable from `u`.
/// Components are numbered by their least vertex.
pub fn factor_components(
    graph: &Graph,
    matching: &Matching,
    family: &GallaiEdmondsFamily,
) -> Result<Vec<FactorComponent>> {
    let n = graph.vertex_count();
    let mut groups: Vec<(VertexSet, bool)> = Vec::new();
    let mut seen = vec![false; n];

    // Inconsistent side.
    let mut queue = VecDeque::new();
    for start in family.d.iter() {
        if seen[start.index()] {
            continue;
        }
        let mut vertices = VertexSet::new(n);
        seen[start.index()] = true;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            vertices.insert(v);
            let v_in_d = family.d.contains(v);
            for &w in graph.neighbors(v) {
                if seen[w.index()] || family.c.contains(w) {
                    continue;
                }
                if v_in_d || family.d.contains(w) {
                    seen[w.index()] = true;
                    queue.push_back(w);
                }
            }
        }
        groups.push((vertices, false));
    }

    // Consistent side. Only connectivity matters, so a vertex is searched
    // only while some non-matching edge of G[C] at it still joins two
    // different partial components.
    let mut sets = DisjointSets::new(n);
    for (u, v) in matching.edges() {
        if family.c.contains(u) {
            sets.union(u.index(), v.index());
        }
    }
    let mut mates = matching.to_mates();
    let mut forest = Forest::new(graph);
    for u in family.c.iter() {
        let open = |sets: &mut DisjointSets, v: VertexId| {
            family.c.contains(v)
                && !matching.contains_edge(u, v)
                && sets.find(u.index()) != sets.find(v.index())
        };
        if !graph.neighbors(u).iter().any(|&v| open(&mut sets, v)) {
            continue;
        }
        let reach = saturated_reach_with(&mut forest, graph, &mut mates, u)?;
        for &v in graph.neighbors(u) {
            if family.c.contains(v) && reach.contains(v) {
                sets.union(u.index(), v.index());
            }
        }
    }
    let mut by_root: Vec<Option<usize>> = vec![None; n];
    for v in family.c.iter() {
        let root = sets.find(v.index());
        let slot = *by_root[root].get_or_insert_with(|| {
            groups.push((VertexSet::new(n), true));
            groups.len() - 1
        });
        groups[slot].0.insert(v);
    }

    groups.sort_by_key(|(vertices, _)| vertices.first());
    Ok(groups
        .into_iter()
        .enumerate()
        .map(|(id, (vertices, consistent))| FactorComponent {
            id,
            vertices,
            consistent,
        })
        .collect())
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
