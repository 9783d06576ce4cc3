//! Immutable simple undirected graphs and the structural operations the
//! matching and decomposition code is built on: induced subgraphs, vertex
//! deletion, contraction of a vertex set and connected components.
//!
//! Vertices are dense indices `0..n`. Every graph also carries an external
//! label per vertex, which is what the text front ends read and print.
//! Derived graphs keep the labels of the vertices they came from and record
//! an explicit origin map back into the parent graph.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Dense vertex index into a specific [`Graph`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(usize);

impl VertexId {
    #[inline]
    pub const fn new(index: usize) -> Self {
        VertexId(index)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        VertexId(index)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of vertices of one graph, stored as a bitset over `0..capacity`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(capacity),
        }
    }

    /// The full vertex set `{0, .., capacity - 1}`.
    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_vertices<I>(capacity: usize, vertices: I) -> Self
    where
        I: IntoIterator<Item = VertexId>,
    {
        let mut set = VertexSet::new(capacity);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Convenience constructor from raw indices.
    pub fn from_indices<I>(capacity: usize, indices: I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        Self::from_vertices(capacity, indices.into_iter().map(VertexId))
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    /// Inserts `v`, growing the capacity if needed. Returns whether `v` was new.
    pub fn insert(&mut self, v: VertexId) -> bool {
        if v.0 >= self.bits.len() {
            self.bits.grow(v.0 + 1);
        }
        !self.bits.put(v.0)
    }

    pub fn remove(&mut self, v: VertexId) {
        if v.0 < self.bits.len() {
            self.bits.set(v.0, false);
        }
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.bits.contains(v.0)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.bits.ones().map(VertexId)
    }

    pub fn first(&self) -> Option<VertexId> {
        self.bits.minimum().map(VertexId)
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        if other.capacity() > out.capacity() {
            out.bits.grow(other.capacity());
        }
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

impl Extend<VertexId> for VertexSet {
    fn extend<T: IntoIterator<Item = VertexId>>(&mut self, iter: T) {
        for v in iter {
            self.insert(v);
        }
    }
}

/// Immutable simple undirected graph with sorted, duplicate-free adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("m", &self.edge_count)
            .field(
                "edges",
                &self
                    .edges()
                    .map(|(u, v)| (self.label(u), self.label(v)))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Incremental construction by label. Vertices get indices in order of
/// first appearance.
#[derive(Default, Debug)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a vertex (possibly isolated) and returns its id.
    pub fn add_vertex(&mut self, label: &str) -> VertexId {
        if let Some(&v) = self.index.get(label) {
            return v;
        }
        let v = VertexId(self.labels.len());
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), v);
        v
    }

    /// Adds the edge `a b`. Repeated edges are merged when building.
    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        if a == b {
            return Err(Error::SelfLoop(a.to_owned()));
        }
        let u = self.add_vertex(a);
        let v = self.add_vertex(b);
        self.edges.push((u, v));
        Ok(())
    }

    pub fn build(self) -> Graph {
        Graph::assemble(self.labels, &self.edges)
    }
}

impl Graph {
    /// Builds a graph from labelled edges. Duplicate edges are merged,
    /// self-loops are rejected.
    pub fn from_labeled_edges<'a, I>(edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut builder = GraphBuilder::new();
        for (a, b) in edges {
            builder.add_edge(a, b)?;
        }
        Ok(builder.build())
    }

    /// Builds a graph on `0..n` whose labels are the decimal indices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut pairs = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u.to_string()));
            }
            pairs.push((VertexId(u), VertexId(v)));
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        Ok(Graph::assemble(labels, &pairs))
    }

    pub fn empty(n: usize) -> Graph {
        Graph::assemble((0..n).map(|i| i.to_string()).collect(), &[])
    }

    fn assemble(labels: Vec<String>, edges: &[(VertexId, VertexId)]) -> Graph {
        let n = labels.len();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            debug_assert!(u != v);
            adjacency[u.0].push(v);
            adjacency[v.0].push(u);
        }
        let mut degree_sum = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Graph {
            labels,
            adjacency,
            edge_count: degree_sum / 2,
        }
    }

    /// Assembles a graph from adjacency lists that are already sorted,
    /// symmetric and loop-free.
    fn from_sorted_adjacency(labels: Vec<String>, adjacency: Vec<Vec<VertexId>>) -> Graph {
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            labels,
            adjacency,
            edge_count,
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> {
        (0..self.vertex_count()).map(VertexId)
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v.0]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.0].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u.0 < self.vertex_count() && self.adjacency[u.0].binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |v| v.0 > u)
                .map(move |&v| (VertexId(u), v))
        })
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks up a vertex by label. Linear in `n`.
    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label).map(VertexId)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.0 < self.vertex_count()
    }

    fn check_members(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|v| !self.contains(*v)) {
            Some(v) => Err(Error::UnknownVertex(v.0)),
            None => Ok(()),
        }
    }

    /// `G[S]`: the subgraph induced by `set`, with vertices renumbered in
    /// increasing original order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Subgraph> {
        self.check_members(set)?;
        let mut position = vec![usize::MAX; self.vertex_count()];
        let origin: Vec<VertexId> = set.iter().collect();
        for (i, v) in origin.iter().enumerate() {
            position[v.0] = i;
        }
        let adjacency = origin
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .iter()
                    .filter(|w| position[w.0] != usize::MAX)
                    .map(|w| VertexId(position[w.0]))
                    .collect()
            })
            .collect();
        let labels = origin.iter().map(|&v| self.labels[v.0].clone()).collect();
        Ok(Subgraph {
            graph: Graph::from_sorted_adjacency(labels, adjacency),
            origin,
        })
    }

    /// `G - S`.
    pub fn delete_vertices(&self, set: &VertexSet) -> Result<Subgraph> {
        self.check_members(set)?;
        let keep = VertexSet::full(self.vertex_count()).difference(set);
        self.induced_subgraph(&keep)
    }

    /// `G / S`: the vertices of `set` are replaced by one new vertex, placed
    /// last. Edges inside `set` disappear and parallel edges are merged.
    pub fn contract(&self, set: &VertexSet) -> Result<ContractionResult> {
        self.check_members(set)?;
        if set.is_empty() {
            return Err(Error::EmptyContraction);
        }
        let n = self.vertex_count();
        let kept = n - set.len();
        let contracted = VertexId(kept);

        let mut image = Vec::with_capacity(n);
        let mut origin = Vec::with_capacity(kept + 1);
        for v in self.vertices() {
            if set.contains(v) {
                image.push(contracted);
            } else {
                image.push(VertexId(origin.len()));
                origin.push(Origin::Vertex(v));
            }
        }
        origin.push(Origin::Contracted);

        let mut adjacency: Vec<Vec<VertexId>> = Vec::with_capacity(kept + 1);
        let mut touches = vec![false; kept];
        for v in self.vertices().filter(|v| !set.contains(*v)) {
            let mut list = Vec::with_capacity(self.degree(v));
            let mut crosses = false;
            for &w in self.neighbors(v) {
                if set.contains(w) {
                    crosses = true;
                } else {
                    list.push(image[w.0]);
                }
            }
            if crosses {
                list.push(contracted);
                touches[image[v.0].0] = true;
            }
            adjacency.push(list);
        }
        adjacency.push(
            touches
                .iter()
                .enumerate()
                .filter(|(_, &t)| t)
                .map(|(i, _)| VertexId(i))
                .collect(),
        );

        let mut labels: Vec<String> = self
            .vertices()
            .filter(|v| !set.contains(*v))
            .map(|v| self.labels[v.0].clone())
            .collect();
        let mut name = String::from("#contracted");
        while labels.contains(&name) {
            name.push('\'');
        }
        labels.push(name);

        Ok(ContractionResult {
            graph: Graph::from_sorted_adjacency(labels, adjacency),
            contracted_vertex: contracted,
            origin,
            image,
        })
    }

    /// Connected components, ordered by their least vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut component = VertexSet::new(n);
            seen[start] = true;
            queue.push_back(VertexId(start));
            while let Some(v) = queue.pop_front() {
                component.insert(v);
                for &w in self.neighbors(v) {
                    if !seen[w.0] {
                        seen[w.0] = true;
                        queue.push_back(w);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    /// Connected components of `G[set]` without materialising the subgraph.
    pub fn components_within(&self, set: &VertexSet) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for start in set.iter() {
            if seen[start.0] {
                continue;
            }
            let mut component = VertexSet::new(n);
            seen[start.0] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                component.insert(v);
                for &w in self.neighbors(v) {
                    if !seen[w.0] && set.contains(w) {
                        seen[w.0] = true;
                        stack.push(w);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    /// `Γ(X)`: vertices outside `set` adjacent to some vertex of `set`.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.vertex_count());
        for v in set.iter() {
            for &w in self.neighbors(v) {
                if !set.contains(w) {
                    out.insert(w);
                }
            }
        }
        out
    }
}

/// An induced subgraph together with the map back to its parent graph.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `origin[i]` is the parent vertex that vertex `i` came from.
    pub origin: Vec<VertexId>,
}

impl Subgraph {
    pub fn parent_vertex(&self, v: VertexId) -> VertexId {
        self.origin[v.0]
    }
}

/// Where a vertex of a contracted graph came from.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Vertex(VertexId),
    Contracted,
}

#[derive(Clone, Debug)]
pub struct ContractionResult {
    pub graph: Graph,
    pub contracted_vertex: VertexId,
    /// Indexed by vertices of the contracted graph.
    pub origin: Vec<Origin>,
    /// Indexed by vertices of the original graph.
    pub image: Vec<VertexId>,
}

impl ContractionResult {
    /// The original vertex behind `v`, or `None` for the contracted vertex.
    pub fn original(&self, v: VertexId) -> Option<VertexId> {
        match self.origin[v.0] {
            Origin::Vertex(w) => Some(w),
            Origin::Contracted => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labeled(edges: &[(&str, &str)]) -> Graph {
        Graph::from_labeled_edges(edges.iter().copied()).unwrap()
    }

    fn set_of(g: &Graph, labels: &[&str]) -> VertexSet {
        VertexSet::from_vertices(
            g.vertex_count(),
            labels.iter().map(|l| g.vertex_by_label(l).unwrap()),
        )
    }

    fn label_edges(g: &Graph) -> Vec<(String, String)> {
        let mut out: Vec<_> = g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (g.label(u).to_owned(), g.label(v).to_owned());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn build_single_edge() {
        let g = labeled(&[("a", "b")]);
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
    }

    #[test]
    fn build_triangle() {
        let g = labeled(&[("a", "b"), ("b", "c"), ("c", "a")]);
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
    }

    #[test]
    fn build_merges_duplicates() {
        let g = labeled(&[("a", "b"), ("b", "a"), ("b", "c")]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(
            label_edges(&g),
            vec![("a".into(), "b".into()), ("b".into(), "c".into())]
        );
    }

    #[test]
    fn build_rejects_self_loop() {
        let err = Graph::from_labeled_edges([("a", "b"), ("c", "c")]).unwrap_err();
        assert_eq!(err, Error::SelfLoop("c".into()));
        assert!(matches!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(Error::SelfLoop(_))
        ));
    }

    #[test]
    fn induced_subgraph_examples() {
        let tri = labeled(&[("a", "b"), ("b", "c"), ("c", "a")]);
        let sub = tri.induced_subgraph(&set_of(&tri, &["a", "b"])).unwrap();
        assert_eq!(label_edges(&sub.graph), vec![("a".into(), "b".into())]);

        let c4 = labeled(&[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")]);
        let sub = c4.induced_subgraph(&set_of(&c4, &["1", "3"])).unwrap();
        assert_eq!((sub.graph.vertex_count(), sub.graph.edge_count()), (2, 0));
        assert_eq!(sub.graph.labels(), &["1".to_string(), "3".to_string()]);
        assert_eq!(
            sub.origin,
            vec![
                c4.vertex_by_label("1").unwrap(),
                c4.vertex_by_label("3").unwrap()
            ]
        );

        let path = labeled(&[("a", "b"), ("b", "c")]);
        let sub = path
            .induced_subgraph(&VertexSet::full(path.vertex_count()))
            .unwrap();
        assert_eq!(sub.graph, path);
    }

    #[test]
    fn induced_subgraph_rejects_unknown_vertex() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let set = VertexSet::from_indices(5, [0, 4]);
        assert_eq!(
            g.induced_subgraph(&set).unwrap_err(),
            Error::UnknownVertex(4)
        );
    }

    #[test]
    fn contract_examples() {
        let tri = labeled(&[("a", "b"), ("b", "c"), ("c", "a")]);
        let c = tri.contract(&set_of(&tri, &["a", "b"])).unwrap();
        assert_eq!((c.graph.vertex_count(), c.graph.edge_count()), (2, 1));
        assert!(c.graph.has_edge(c.contracted_vertex, VertexId(0)));
        assert_eq!(c.original(VertexId(0)), tri.vertex_by_label("c"));

        let kite = labeled(&[("u1", "u2"), ("v1", "v2"), ("u1", "v1"), ("u1", "v2")]);
        let c = kite.contract(&set_of(&kite, &["u1", "u2"])).unwrap();
        assert_eq!((c.graph.vertex_count(), c.graph.edge_count()), (3, 3));
        let x = c.contracted_vertex;
        for v in c.graph.vertices().filter(|&v| v != x) {
            assert!(c.graph.has_edge(x, v));
        }
        assert_eq!(c.image[kite.vertex_by_label("u2").unwrap().index()], x);

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let c = k2.contract(&VertexSet::full(2)).unwrap();
        assert_eq!((c.graph.vertex_count(), c.graph.edge_count()), (1, 0));
    }

    #[test]
    fn contract_rejects_empty_set() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(
            g.contract(&VertexSet::new(2)).unwrap_err(),
            Error::EmptyContraction
        );
    }

    #[test]
    fn contracted_label_avoids_collisions() {
        let g = labeled(&[("#contracted", "b"), ("b", "c")]);
        let c = g.contract(&set_of(&g, &["c"])).unwrap();
        assert_eq!(c.graph.label(c.contracted_vertex), "#contracted'");
    }

    #[test]
    fn delete_vertices_examples() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let sub = c4
            .delete_vertices(&VertexSet::from_indices(4, [0]))
            .unwrap();
        assert_eq!((sub.graph.vertex_count(), sub.graph.edge_count()), (3, 2));
        let sub = c4
            .delete_vertices(&VertexSet::from_indices(4, [0, 2]))
            .unwrap();
        assert_eq!((sub.graph.vertex_count(), sub.graph.edge_count()), (2, 0));
        let sub = c4.delete_vertices(&VertexSet::new(4)).unwrap();
        assert_eq!(sub.graph, c4);
    }

    #[test]
    fn connected_components_examples() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let comps = two_k2.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));

        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.connected_components().len(), 1);

        let empty = Graph::empty(3);
        let comps = empty.connected_components();
        assert_eq!(comps.len(), 3);
        assert_eq!(
            comps
                .iter()
                .map(|c| c.first().unwrap().index())
                .collect::<Vec<_>>(),
            vec![0, 1, 2]
        );
    }

    #[test]
    fn neighborhood_excludes_the_set() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let n = path.neighborhood(&VertexSet::from_indices(4, [1, 2]));
        assert_eq!(n.to_vec(), vec![VertexId(0), VertexId(3)]);
    }
}
