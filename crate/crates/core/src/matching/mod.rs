//! Maximum matching and the alternating-path routines derived from it.
//!
//! Every routine here takes the matching explicitly. Nothing recomputes a
//! matching behind the caller's back, so all results are consistent with one
//! certified maximum matching.

mod forest;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

pub(crate) use forest::{Forest, NONE};

/// A set of pairwise disjoint edges of one graph, stored as a mate map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<VertexId>>,
    size: usize,
}

impl Matching {
    pub fn empty(vertex_count: usize) -> Self {
        Matching {
            mate: vec![None; vertex_count],
            size: 0,
        }
    }

    /// Validates that `edges` are edges of `graph` with disjoint endpoints.
    pub fn from_edges(graph: &Graph, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut matching = Matching::empty(graph.vertex_count());
        for &(u, v) in edges {
            if !graph.contains(u) {
                return Err(Error::UnknownVertex(u.index()));
            }
            if !graph.has_edge(u, v) {
                return Err(Error::InvalidMatching(format!(
                    "{} {} is not an edge",
                    graph.label(u),
                    graph.label(v)
                )));
            }
            if matching.mate[u.index()].is_some() || matching.mate[v.index()].is_some() {
                return Err(Error::InvalidMatching(format!(
                    "edge {} {} shares an endpoint with another matching edge",
                    graph.label(u),
                    graph.label(v)
                )));
            }
            matching.mate[u.index()] = Some(v);
            matching.mate[v.index()] = Some(u);
            matching.size += 1;
        }
        Ok(matching)
    }

    pub(crate) fn from_mates(mates: &[usize]) -> Self {
        let mate: Vec<Option<VertexId>> = mates
            .iter()
            .map(|&m| (m != NONE).then(|| VertexId::new(m)))
            .collect();
        let size = mate.iter().filter(|m| m.is_some()).count() / 2;
        Matching { mate, size }
    }

    pub(crate) fn to_mates(&self) -> Vec<usize> {
        self.mate
            .iter()
            .map(|m| m.map_or(NONE, VertexId::index))
            .collect()
    }

    #[inline]
    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        self.mate[v.index()]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vertex_count(&self) -> usize {
        self.mate.len()
    }

    pub fn covers(&self, v: VertexId) -> bool {
        self.mate[v.index()].is_some()
    }

    pub fn contains_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.mate[u.index()] == Some(v)
    }

    pub fn exposed(&self) -> VertexSet {
        VertexSet::from_indices(
            self.mate.len(),
            (0..self.mate.len()).filter(|&v| self.mate[v].is_none()),
        )
    }

    /// Matched edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| match m {
                Some(v) if v.index() > u => Some((VertexId::new(u), *v)),
                _ => None,
            })
            .collect()
    }

    fn check_graph(&self, graph: &Graph) -> Result<()> {
        if self.vertex_count() != graph.vertex_count() {
            return Err(Error::InvalidMatching(format!(
                "matching spans {} vertices, graph has {}",
                self.vertex_count(),
                graph.vertex_count()
            )));
        }
        Ok(())
    }
}

/// The partition of `V(G)` into `D(G)`, `A(G)` and `C(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiEdmondsFamily {
    /// Vertices exposed by at least one maximum matching.
    pub d: VertexSet,
    /// Neighbours of `D` outside `D`.
    pub a: VertexSet,
    /// Everything else.
    pub c: VertexSet,
    /// `|V(G)| - 2ν(G)`.
    pub deficiency: usize,
}

impl GallaiEdmondsFamily {
    pub fn is_factorizable(&self) -> bool {
        self.deficiency == 0
    }
}

/// A maximum cardinality matching found with Edmonds' blossom algorithm.
/// The result only depends on vertex and adjacency order.
pub fn maximum_matching(graph: &Graph) -> Matching {
    Matching::from_mates(&forest::maximum_mates(graph))
}

/// `|V(G)| - 2|M|`, which is the deficiency when `M` is maximum.
pub fn deficiency(graph: &Graph, matching: &Matching) -> usize {
    graph.vertex_count() - 2 * matching.size()
}

/// Even vertices of the alternating forest grown from all exposed vertices
/// of `mates`, i.e. `D` of the graph with `excluded` removed.
pub(crate) fn even_set(graph: &Graph, mates: &[usize], excluded: usize) -> Result<VertexSet> {
    even_set_in(&mut Forest::new(graph), graph, mates, excluded)
}

/// As [`even_set`], reusing the buffers of `forest`.
pub(crate) fn even_set_in(
    forest: &mut Forest<'_>,
    graph: &Graph,
    mates: &[usize],
    excluded: usize,
) -> Result<VertexSet> {
    let even = forest
        .even_reach(mates, excluded)
        .map_err(|_| Error::NotMaximum)?;
    Ok(VertexSet::from_indices(
        graph.vertex_count(),
        even.iter().enumerate().filter(|(_, &e)| e).map(|(v, _)| v),
    ))
}

/// Computes `D`, `A` and `C` from one alternating-forest search. Fails with
/// [`Error::NotMaximum`] if the search discovers an augmenting path.
pub fn gallai_edmonds(graph: &Graph, matching: &Matching) -> Result<GallaiEdmondsFamily> {
    matching.check_graph(graph)?;
    let d = even_set(graph, &matching.to_mates(), NONE)?;
    let a = graph.neighborhood(&d);
    let c = VertexSet::full(graph.vertex_count())
        .difference(&d)
        .difference(&a);
    Ok(GallaiEdmondsFamily {
        d,
        a,
        c,
        deficiency: deficiency(graph, matching),
    })
}

/// Vertices joined to `u` by an `M`-saturated path, for `u ∉ D(G)`.
///
/// Computed as `D(G - u)` using `M` minus the matched edge at `u`, which is
/// a maximum matching of `G - u` whenever `u ∉ D(G)`. If `u ∈ D(G)` that
/// matching is not maximum and the search reports a precondition error.
/// Vertices of `D(G)` are always part of the result.
pub fn saturated_reach(graph: &Graph, matching: &Matching, u: VertexId) -> Result<VertexSet> {
    matching.check_graph(graph)?;
    let mut mates = matching.to_mates();
    saturated_reach_with(&mut Forest::new(graph), graph, &mut mates, u)
}

/// As [`saturated_reach`], reusing a mate array that is restored on return.
pub(crate) fn saturated_reach_with(
    forest: &mut Forest<'_>,
    graph: &Graph,
    mates: &mut [usize],
    u: VertexId,
) -> Result<VertexSet> {
    if !graph.contains(u) {
        return Err(Error::UnknownVertex(u.index()));
    }
    let ui = u.index();
    let partner = mates[ui];
    if partner == NONE {
        return Err(Error::Precondition(format!(
            "vertex {} is exposed, so it lies in D(G)",
            graph.label(u)
        )));
    }
    mates[ui] = NONE;
    mates[partner] = NONE;
    let result = even_set_in(forest, graph, mates, ui);
    mates[ui] = partner;
    mates[partner] = ui;
    result.map_err(|e| match e {
        Error::NotMaximum => Error::Precondition(format!(
            "vertex {} lies in D(G) or the matching is not maximum",
            graph.label(u)
        )),
        other => other,
    })
}

/// Allowed edges incident to `u`: its matched edge plus every non-matching
/// edge `uv` such that an `M`-saturated path joins `u` and `v`.
///
/// Requires `u ∈ C(G)` or `G` factorizable; edges at `D ∪ A` vertices are
/// handled structurally by the decomposition.
pub fn allowed_edges_at(
    graph: &Graph,
    matching: &Matching,
    family: &GallaiEdmondsFamily,
    u: VertexId,
) -> Result<Vec<(VertexId, VertexId)>> {
    matching.check_graph(graph)?;
    if !graph.contains(u) {
        return Err(Error::UnknownVertex(u.index()));
    }
    if !family.c.contains(u) {
        return Err(Error::Precondition(format!(
            "vertex {} is not in C(G)",
            graph.label(u)
        )));
    }
    let reach = saturated_reach(graph, matching, u)?;
    Ok(graph
        .neighbors(u)
        .iter()
        .filter(|&&v| matching.contains_edge(u, v) || reach.contains(v))
        .map(|&v| (u, v))
        .collect())
}

/// Every allowed edge of `graph`, as `(u, v)` with `u < v`, sorted.
///
/// An edge `uv` is allowed iff `ν(G - u - v) = ν(G) - 1`. For `u ∉ D(G)`
/// this holds iff `v ∈ D(G - u)`; for `u ∈ D(G)` it holds iff
/// `v ∉ D(G - u)`, using a maximum matching of `G - u` obtained from `M`
/// by one augmenting search. One forest search per vertex in total.
pub fn allowed_edges(
    graph: &Graph,
    matching: &Matching,
    family: &GallaiEdmondsFamily,
) -> Result<Vec<(VertexId, VertexId)>> {
    matching.check_graph(graph)?;
    let mut mates = matching.to_mates();
    let mut forest = Forest::new(graph);
    let mut out = Vec::new();
    for u in graph.vertices() {
        if !graph.neighbors(u).iter().any(|&v| v > u) {
            continue;
        }
        let in_d = family.d.contains(u);
        let reach = if in_d {
            let ui = u.index();
            let mut local = mates.clone();
            let partner = local[ui];
            if partner != NONE {
                local[ui] = NONE;
                local[partner] = NONE;
                if !forest.augment_from(&mut local, partner, ui) {
                    return Err(Error::Precondition(format!(
                        "vertex {} is not in D(G)",
                        graph.label(u)
                    )));
                }
            }
            even_set_in(&mut forest, graph, &local, ui)?
        } else {
            saturated_reach_with(&mut forest, graph, &mut mates, u)?
        };
        out.extend(
            graph
                .neighbors(u)
                .iter()
                .filter(|&&v| v > u && reach.contains(v) != in_d)
                .map(|&v| (u, v)),
        );
    }
    Ok(out)
}

/// The vertex set of the connected component of `G[D(G)]` containing the
/// exposed vertex `r`.
pub fn root_component(graph: &Graph, matching: &Matching, r: VertexId) -> Result<VertexSet> {
    matching.check_graph(graph)?;
    if !graph.contains(r) {
        return Err(Error::UnknownVertex(r.index()));
    }
    if matching.covers(r) {
        return Err(Error::Precondition(format!(
            "vertex {} is covered by the matching",
            graph.label(r)
        )));
    }
    let d = even_set(graph, &matching.to_mates(), NONE)?;
    component_containing(graph, &d, r)
}

pub(crate) fn component_containing(
    graph: &Graph,
    within: &VertexSet,
    start: VertexId,
) -> Result<VertexSet> {
    let mut out = VertexSet::new(graph.vertex_count());
    let mut stack = vec![start];
    out.insert(start);
    while let Some(v) = stack.pop() {
        for &w in graph.neighbors(v) {
            if within.contains(w) && out.insert(w) {
                stack.push(w);
            }
        }
    }
    Ok(out)
}
