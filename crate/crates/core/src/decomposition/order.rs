use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching::{self, Matching, NONE};

use super::FactorComponent;

/// The basilica order as reflexive upper sets over component ids, plus the
/// covering pairs derived from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasilicaPoset {
    upper: Vec<FixedBitSet>,
    hasse_edges: Vec<(usize, usize)>,
}

impl BasilicaPoset {
    /// Builds the poset from reflexive upper sets, rejecting anything that
    /// is not a partial order.
    pub fn from_upper_sets(upper: Vec<FixedBitSet>) -> Result<Self> {
        let k = upper.len();
        for (a, set) in upper.iter().enumerate() {
            if set.len() != k {
                return Err(Error::NotAPoset(format!(
                    "upper set {} has capacity {}, expected {}",
                    a,
                    set.len(),
                    k
                )));
            }
            if !set.contains(a) {
                return Err(Error::NotAPoset(format!("{a} is not below itself")));
            }
            for b in set.ones() {
                if !upper[b].is_subset(set) {
                    return Err(Error::NotAPoset(format!(
                        "{a} <= {b} but not every bound of {b} is a bound of {a}"
                    )));
                }
            }
        }
        let hasse_edges = hasse(&upper)?;
        Ok(BasilicaPoset { upper, hasse_edges })
    }

    pub fn len(&self) -> usize {
        self.upper.len()
    }

    pub fn is_empty(&self) -> bool {
        self.upper.is_empty()
    }

    /// `lower ⊴ upper`.
    pub fn leq(&self, lower: usize, upper: usize) -> bool {
        self.upper[lower].contains(upper)
    }

    /// Ids `H'` with `H ⊴ H'`, including `H` itself, ascending.
    pub fn upper_set(&self, component: usize) -> impl Iterator<Item = usize> + '_ {
        self.upper[component].ones()
    }

    /// Ids `H' ≠ H` with `H ⊴ H'`, ascending.
    pub fn strict_upper_set(&self, component: usize) -> impl Iterator<Item = usize> + '_ {
        self.upper[component]
            .ones()
            .filter(move |&c| c != component)
    }

    pub fn upper_sets(&self) -> &[FixedBitSet] {
        &self.upper
    }

    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse_edges
    }

    pub fn is_minimal(&self, component: usize) -> bool {
        !(0..self.len()).any(|c| c != component && self.leq(c, component))
    }

    pub fn is_maximal(&self, component: usize) -> bool {
        self.strict_upper_set(component).next().is_none()
    }
}

/// Covering pairs `(a, b)`: `a ⊴ b`, `a ≠ b`, nothing strictly between.
/// Fails if the strict relation has a cycle.
pub fn hasse(upper: &[FixedBitSet]) -> Result<Vec<(usize, usize)>> {
    let k = upper.len();
    let strict = |a: usize| upper[a].ones().filter(move |&b| b != a && b < k);

    // Kahn's algorithm on the strict relation.
    let mut indegree = vec![0usize; k];
    for a in 0..k {
        for b in strict(a) {
            indegree[b] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..k).filter(|&a| indegree[a] == 0).collect();
    let mut removed = 0;
    while let Some(a) = ready.pop() {
        removed += 1;
        for b in strict(a) {
            indegree[b] -= 1;
            if indegree[b] == 0 {
                ready.push(b);
            }
        }
    }
    if removed != k {
        return Err(Error::NotAPoset("the relation contains a cycle".into()));
    }

    let mut strict_lower = vec![FixedBitSet::with_capacity(k); k];
    for a in 0..k {
        for b in strict(a) {
            strict_lower[b].insert(a);
        }
    }
    let mut edges = Vec::new();
    for a in 0..k {
        for b in strict(a) {
            let mut between = strict_lower[b].clone();
            between.intersect_with(&upper[a]);
            between.set(a, false);
            if between.is_clear() {
                edges.push((a, b));
            }
        }
    }
    Ok(edges)
}

/// Strict upper-bound vertices `vup(H)`: contract `H` to a vertex `h`, drop
/// the matching edges inside `H` (what remains is maximum in `G / H` and
/// exposes `h`), and take the component of `D(G / H)` containing `h`.
pub fn strict_upper_vertices(
    graph: &Graph,
    matching: &Matching,
    component: &VertexSet,
) -> Result<VertexSet> {
    let contraction = graph.contract(component)?;
    let contracted = &contraction.graph;
    let mut mates = vec![NONE; contracted.vertex_count()];
    for (u, v) in matching.edges() {
        match (component.contains(u), component.contains(v)) {
            (true, true) => {}
            (false, false) => {
                let (cu, cv) = (contraction.image[u.index()], contraction.image[v.index()]);
                mates[cu.index()] = cv.index();
                mates[cv.index()] = cu.index();
            }
            _ => {
                return Err(Error::Invariant(format!(
                    "matching edge {} {} leaves a factor-component",
                    graph.label(u),
                    graph.label(v)
                )))
            }
        }
    }
    let g0 = contraction.contracted_vertex;
    let d = matching::even_set(contracted, &mates, NONE).map_err(|_| {
        Error::Invariant("matching is not maximum after contracting a factor-component".into())
    })?;
    let root = matching::component_containing(contracted, &d, g0)?;
    Ok(VertexSet::from_vertices(
        graph.vertex_count(),
        root.iter()
            .filter(|&v| v != g0)
            .filter_map(|v| contraction.original(v)),
    ))
}

/// Computes `(G(G), ⊴)` from one `vup` search per component and checks the
/// partial-order axioms on the result.
pub fn basilica_order(
    graph: &Graph,
    matching: &Matching,
    components: &[FactorComponent],
) -> Result<BasilicaPoset> {
    let k = components.len();
    let mut component_of = vec![usize::MAX; graph.vertex_count()];
    for c in components {
        for v in c.vertices.iter() {
            component_of[v.index()] = c.id;
        }
    }
    let mut upper = Vec::with_capacity(k);
    for c in components {
        let vup = strict_upper_vertices(graph, matching, &c.vertices)?;
        let mut set = FixedBitSet::with_capacity(k);
        set.insert(c.id);
        for v in vup.iter() {
            set.insert(component_of[v.index()]);
        }
        upper.push(set);
    }
    for c in components.iter().filter(|c| !c.consistent) {
        if let Some(lower) = (0..k).find(|&a| a != c.id && upper[a].contains(c.id)) {
            return Err(Error::Invariant(format!(
                "inconsistent component {} lies strictly above component {}",
                c.id, lower
            )));
        }
    }
    BasilicaPoset::from_upper_sets(upper).map_err(|e| match e {
        Error::NotAPoset(msg) => Error::Invariant(format!("computed order: {msg}")),
        other => other,
    })
}
