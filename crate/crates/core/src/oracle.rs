//! Definition-level reference implementations for small graphs.
//!
//! Everything here is evaluated straight from the definitions by exhaustive
//! search over vertex subsets and matchings: `ν` of every induced subgraph is
//! tabulated, maximum matchings are enumerated, and the basilica order is
//! decided by trying every separating set. None of it calls the blossom
//! search or the decomposition pipeline. Cost is exponential in `n`, so every
//! entry point is guarded by a vertex limit.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::matching::{GallaiEdmondsFamily, Matching};

/// Default vertex limit for oracle queries.
pub const DEFAULT_LIMIT: usize = 12;

/// Hard ceiling on any configured limit (the `ν` table has `2^n` entries).
pub const MAX_LIMIT: usize = 24;

/// `table[mask]` is the size of a maximum matching of the subgraph induced
/// by `mask`, computed by branching on the lowest vertex.
fn nu_table(adj: &[u32]) -> Vec<u8> {
    let size = 1usize << adj.len();
    let mut table = vec![0u8; size];
    for mask in 1..size {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = table[rest];
        let mut neighbors = adj[v] & rest as u32;
        while neighbors != 0 {
            let w = neighbors.trailing_zeros() as usize;
            best = best.max(1 + table[rest & !(1 << w)]);
            neighbors &= neighbors - 1;
        }
        table[mask] = best;
    }
    table
}

fn factor_critical_in(table: &[u8], mask: usize) -> bool {
    let size = mask.count_ones() as usize;
    if size.is_multiple_of(2) {
        return false;
    }
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros();
        if 2 * table[mask & !(1 << v)] as usize != size - 1 {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

fn check_limit(graph: &Graph, limit: usize) -> Result<()> {
    let limit = limit.min(MAX_LIMIT);
    if graph.vertex_count() > limit {
        return Err(Error::OracleGuard {
            vertices: graph.vertex_count(),
            limit,
        });
    }
    Ok(())
}

fn adjacency_masks(graph: &Graph) -> Vec<u32> {
    graph
        .vertices()
        .map(|v| {
            graph
                .neighbors(v)
                .iter()
                .fold(0u32, |acc, w| acc | (1 << w.index()))
        })
        .collect()
}

fn mask_to_set(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_indices(n, (0..n).filter(|&v| mask & (1 << v) != 0))
}

fn set_to_mask(set: &VertexSet) -> u32 {
    set.iter().fold(0u32, |acc, v| acc | (1 << v.index()))
}

/// Whether every vertex-deleted subgraph has a perfect matching. Guarded by
/// [`DEFAULT_LIMIT`].
pub fn is_factor_critical(graph: &Graph) -> Result<bool> {
    is_factor_critical_with_limit(graph, DEFAULT_LIMIT)
}

pub fn is_factor_critical_with_limit(graph: &Graph, limit: usize) -> Result<bool> {
    check_limit(graph, limit)?;
    let n = graph.vertex_count();
    if n == 0 {
        return Ok(false);
    }
    let table = nu_table(&adjacency_masks(graph));
    Ok(factor_critical_in(&table, (1 << n) - 1))
}

/// A factor-component as found by the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleComponent {
    pub vertices: VertexSet,
    pub consistent: bool,
}

/// Everything the oracle knows about one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub nu: usize,
    pub deficiency: usize,
    pub family: GallaiEdmondsFamily,
    /// `(u, v)` with `u < v`, sorted.
    pub allowed_edges: Vec<(VertexId, VertexId)>,
    /// Ordered by least vertex.
    pub components: Vec<OracleComponent>,
    /// Similar pairs `(u, v)` with `u < v`; `u ∼ u` is implied.
    pub similarity: Vec<(VertexId, VertexId)>,
    /// All pairs `(i, j)` of component indices with `i ⊴ j`, reflexive pairs
    /// included, sorted.
    pub order: Vec<(usize, usize)>,
}

/// Exhaustive evaluation of the matching-theoretic definitions on one graph.
pub struct Oracle<'g> {
    graph: &'g Graph,
    adj: Vec<u32>,
    nu: Vec<u8>,
    full: usize,
    matchings: Vec<Vec<(usize, usize)>>,
    allowed_adj: Vec<u32>,
    components: Vec<(u32, bool)>,
    component_of: Vec<usize>,
    d: u32,
    /// Per component: every critical-inducing set, as vertex masks.
    critical: Vec<Vec<u32>>,
}

impl<'g> Oracle<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        Self::with_limit(graph, DEFAULT_LIMIT)
    }

    pub fn with_limit(graph: &'g Graph, limit: usize) -> Result<Self> {
        check_limit(graph, limit)?;
        let n = graph.vertex_count();
        let adj = adjacency_masks(graph);
        let nu = nu_table(&adj);
        let full = (1usize << n) - 1;

        let mut oracle = Oracle {
            graph,
            adj,
            nu,
            full,
            matchings: Vec::new(),
            allowed_adj: vec![0; n],
            components: Vec::new(),
            component_of: vec![usize::MAX; n],
            d: 0,
            critical: Vec::new(),
        };

        let target = oracle.nu[full] as usize;
        let mut current = Vec::new();
        let mut found = Vec::new();
        oracle.enumerate(full, target, &mut current, &mut found);
        oracle.matchings = found;

        for matching in &oracle.matchings {
            let mut covered = 0u32;
            for &(u, v) in matching {
                covered |= (1 << u) | (1 << v);
                oracle.allowed_adj[u] |= 1 << v;
                oracle.allowed_adj[v] |= 1 << u;
            }
            oracle.d |= full as u32 & !covered;
        }

        let mut assigned = 0u32;
        for start in 0..n {
            if assigned & (1 << start) != 0 {
                continue;
            }
            let mut members = 1u32 << start;
            let mut frontier = members;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = oracle.allowed_adj[v] & !members;
                members |= fresh;
                frontier |= fresh;
            }
            assigned |= members;
            let id = oracle.components.len();
            for v in 0..n {
                if members & (1 << v) != 0 {
                    oracle.component_of[v] = id;
                }
            }
            oracle.components.push((members, members & oracle.d == 0));
        }

        oracle.critical = (0..oracle.components.len())
            .map(|h| oracle.enumerate_critical_inducing(h))
            .collect();
        Ok(oracle)
    }

    fn enumerate(
        &self,
        mask: usize,
        need: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if need == 0 {
            out.push(current.clone());
            return;
        }
        if (self.nu[mask] as usize) < need {
            return;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        if self.nu[rest] as usize >= need {
            self.enumerate(rest, need, current, out);
        }
        let mut neighbors = self.adj[v] & rest as u32;
        while neighbors != 0 {
            let w = neighbors.trailing_zeros() as usize;
            neighbors &= neighbors - 1;
            let remaining = rest & !(1 << w);
            if self.nu[remaining] as usize + 1 >= need {
                current.push((v, w));
                self.enumerate(remaining, need - 1, current, out);
                current.pop();
            }
        }
    }

    /// Separating sets `X ⊇ V(H)` with `G[X] / H` factor-critical.
    fn enumerate_critical_inducing(&self, h: usize) -> Vec<u32> {
        let n = self.graph.vertex_count();
        let h_mask = self.components[h].0;

        // Contract H: the remaining vertices keep their relative order and
        // the contracted vertex comes last.
        let outside: Vec<usize> = (0..n).filter(|&v| h_mask & (1 << v) == 0).collect();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in outside.iter().enumerate() {
            position[v] = i;
        }
        let hub = outside.len();
        let mut adj = vec![0u32; hub + 1];
        for (i, &v) in outside.iter().enumerate() {
            for w in 0..n {
                if self.adj[v] & (1 << w) == 0 {
                    continue;
                }
                if h_mask & (1 << w) != 0 {
                    adj[i] |= 1 << hub;
                    adj[hub] |= 1 << i;
                } else {
                    adj[i] |= 1 << position[w];
                }
            }
        }
        let table = nu_table(&adj);

        let others: Vec<usize> = (0..self.components.len()).filter(|&c| c != h).collect();
        let mut out = Vec::new();
        for subset in 0u32..(1 << others.len()) {
            let mut original = h_mask;
            let mut contracted = 1usize << hub;
            for (bit, &c) in others.iter().enumerate() {
                if subset & (1 << bit) == 0 {
                    continue;
                }
                let members = self.components[c].0;
                original |= members;
                for v in 0..n {
                    if members & (1 << v) != 0 {
                        contracted |= 1 << position[v];
                    }
                }
            }
            if factor_critical_in(&table, contracted) {
                out.push(original);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn nu(&self) -> usize {
        self.nu[self.full] as usize
    }

    pub fn deficiency(&self) -> usize {
        self.graph.vertex_count() - 2 * self.nu()
    }

    /// `def(G - removed)`.
    pub fn deficiency_without(&self, removed: &[VertexId]) -> usize {
        let mut mask = self.full;
        for v in removed {
            mask &= !(1 << v.index());
        }
        mask.count_ones() as usize - 2 * self.nu[mask] as usize
    }

    /// All maximum matchings.
    pub fn enumerate_maximum_matchings(&self) -> Vec<Matching> {
        self.matchings
            .iter()
            .map(|edges| {
                let pairs: Vec<_> = edges
                    .iter()
                    .map(|&(u, v)| (VertexId::new(u), VertexId::new(v)))
                    .collect();
                Matching::from_edges(self.graph, &pairs)
                    .expect("enumerated edge sets are matchings")
            })
            .collect()
    }

    /// `D` as the union of exposed sets over all maximum matchings.
    pub fn gallai_edmonds(&self) -> GallaiEdmondsFamily {
        let n = self.graph.vertex_count();
        let d = self.d;
        let a = (0..n)
            .filter(|&v| d & (1 << v) == 0 && self.adj[v] & d != 0)
            .fold(0u32, |acc, v| acc | (1 << v));
        let c = self.full as u32 & !d & !a;
        GallaiEdmondsFamily {
            d: mask_to_set(n, d),
            a: mask_to_set(n, a),
            c: mask_to_set(n, c),
            deficiency: self.deficiency(),
        }
    }

    /// Edges contained in at least one maximum matching.
    pub fn allowed_edges(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.graph.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.allowed_adj[u] & (1 << v) != 0 {
                    out.push((VertexId::new(u), VertexId::new(v)));
                }
            }
        }
        out
    }

    /// Connected components of the allowed-edge subgraph (vertices without
    /// allowed edges are singletons), by least vertex.
    pub fn factor_components(&self) -> Vec<OracleComponent> {
        let n = self.graph.vertex_count();
        self.components
            .iter()
            .map(|&(mask, consistent)| OracleComponent {
                vertices: mask_to_set(n, mask),
                consistent,
            })
            .collect()
    }

    pub fn component_of(&self, v: VertexId) -> usize {
        self.component_of[v.index()]
    }

    /// `u ∼ v`: equal, or in one factor-component with
    /// `def(G - u - v) > def(G)`.
    pub fn similar(&self, u: VertexId, v: VertexId) -> bool {
        u == v
            || (self.component_of(u) == self.component_of(v)
                && self.deficiency_without(&[u, v]) > self.deficiency())
    }

    /// Every critical-inducing set for the component with index `h`.
    pub fn critical_inducing_sets(&self, h: usize) -> Vec<VertexSet> {
        let n = self.graph.vertex_count();
        self.critical[h]
            .iter()
            .map(|&m| mask_to_set(n, m))
            .collect()
    }

    /// Whether `X` is a critical-inducing set for component `h`: separating,
    /// containing `V(H)`, with `G[X] / H` factor-critical.
    pub fn is_critical_inducing(&self, h: usize, set: &VertexSet) -> bool {
        self.critical[h].binary_search(&set_to_mask(set)).is_ok()
    }

    /// `lower ⊴ upper`: some critical-inducing set for `lower` contains
    /// `upper`.
    pub fn order(&self, lower: usize, upper: usize) -> bool {
        let target = self.components[upper].0;
        self.critical[lower].iter().any(|&x| x & target == target)
    }

    /// Equivalence classes of `∼`, each sorted, listed by least vertex.
    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.graph.vertex_count();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for u in self.graph.vertices() {
            if seen.contains(u) {
                continue;
            }
            let class =
                VertexSet::from_vertices(n, self.graph.vertices().filter(|&v| self.similar(u, v)));
            seen.union_with(&class);
            out.push(class);
        }
        out
    }

    pub fn report(&self) -> OracleReport {
        let n = self.graph.vertex_count();
        let k = self.components.len();
        let mut similarity = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let (u, v) = (VertexId::new(u), VertexId::new(v));
                if self.similar(u, v) {
                    similarity.push((u, v));
                }
            }
        }
        let mut order = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if self.order(a, b) {
                    order.push((a, b));
                }
            }
        }
        OracleReport {
            nu: self.nu(),
            deficiency: self.deficiency(),
            family: self.gallai_edmonds(),
            allowed_edges: self.allowed_edges(),
            components: self.factor_components(),
            similarity,
            order,
        }
    }
}
