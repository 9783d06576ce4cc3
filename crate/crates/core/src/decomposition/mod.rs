//! The basilica decomposition: factor-components, the generalized
//! Kotzig-Lovász partition, the basilica order on components, and the
//! attachment of every strict upper bound to a class of the component
//! below it.
//!
//! [`decompose`] runs the whole pipeline. The individual stages are public
//! so they can be driven with a caller-supplied maximum matching.

mod attachments;
mod components;
mod kotzig_lovasz;
mod order;

pub use attachments::{attachments, upper_vertices};
pub use components::factor_components;
pub use kotzig_lovasz::kotzig_lovasz;
pub use order::{basilica_order, hasse, strict_upper_vertices, BasilicaPoset};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::matching::{self, GallaiEdmondsFamily, Matching};

/// A connected component of the allowed-edge subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorComponent {
    pub id: usize,
    pub vertices: VertexSet,
    /// Disjoint from `D(G)`; equivalently, contained in `C(G)`.
    pub consistent: bool,
}

/// One equivalence class of the generalized Kotzig-Lovász relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KotzigLovaszClass {
    pub component: usize,
    pub vertices: VertexSet,
}

/// A connected component `K` of `G[vup(H)]` together with the class of `H`
/// that absorbs every neighbour of `K` inside `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attachment {
    /// Id of `H`.
    pub lower: usize,
    pub up_component: VertexSet,
    /// Index into [`BasilicaDecomposition::classes`].
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct BasilicaDecomposition {
    pub graph: Graph,
    pub matching: Matching,
    pub family: GallaiEdmondsFamily,
    pub components: Vec<FactorComponent>,
    pub classes: Vec<KotzigLovaszClass>,
    pub poset: BasilicaPoset,
    pub attachments: Vec<Attachment>,
    component_of: Vec<usize>,
    class_of: Vec<usize>,
}

impl BasilicaDecomposition {
    /// Assembles a decomposition from precomputed parts, checking that they
    /// reference each other consistently.
    pub fn from_parts(
        graph: Graph,
        matching: Matching,
        family: GallaiEdmondsFamily,
        components: Vec<FactorComponent>,
        classes: Vec<KotzigLovaszClass>,
        poset: BasilicaPoset,
        attachments: Vec<Attachment>,
    ) -> Result<Self> {
        let n = graph.vertex_count();
        let mut component_of = vec![usize::MAX; n];
        for (i, c) in components.iter().enumerate() {
            if c.id != i {
                return Err(Error::Invariant(format!(
                    "component {i} carries id {}",
                    c.id
                )));
            }
            for v in c.vertices.iter() {
                if component_of[v.index()] != usize::MAX {
                    return Err(Error::Invariant(format!(
                        "vertex {} lies in two components",
                        graph.label(v)
                    )));
                }
                component_of[v.index()] = i;
            }
        }
        if component_of.contains(&usize::MAX) {
            return Err(Error::Invariant("components do not cover V(G)".into()));
        }
        let mut class_of = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            for v in class.vertices.iter() {
                if component_of[v.index()] != class.component || class_of[v.index()] != usize::MAX {
                    return Err(Error::Invariant(format!(
                        "class {i} is not a block of a partition of component {}",
                        class.component
                    )));
                }
                class_of[v.index()] = i;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(Error::Invariant("classes do not cover V(G)".into()));
        }
        if poset.len() != components.len() {
            return Err(Error::Invariant(
                "poset and components disagree in size".into(),
            ));
        }
        for att in &attachments {
            if att.lower >= components.len()
                || att.class >= classes.len()
                || classes[att.class].component != att.lower
            {
                return Err(Error::Invariant(
                    "attachment references a foreign class".into(),
                ));
            }
        }
        Ok(BasilicaDecomposition {
            graph,
            matching,
            family,
            components,
            classes,
            poset,
            attachments,
            component_of,
            class_of,
        })
    }

    pub fn component_of(&self, v: VertexId) -> usize {
        self.component_of[v.index()]
    }

    pub fn class_of(&self, v: VertexId) -> usize {
        self.class_of[v.index()]
    }

    pub fn deficiency(&self) -> usize {
        self.family.deficiency
    }

    /// Classes of one component, by least vertex.
    pub fn classes_of_component(
        &self,
        component: usize,
    ) -> impl Iterator<Item = &KotzigLovaszClass> {
        self.classes
            .iter()
            .filter(move |c| c.component == component)
    }

    /// `vup(H)`: vertices of the strict upper bounds of `component`.
    pub fn upper_vertices(&self, component: usize) -> VertexSet {
        upper_vertices(&self.graph, &self.components, &self.poset, component)
    }

    /// `vup*(H)`: [`Self::upper_vertices`] plus the component itself.
    pub fn upper_vertices_inclusive(&self, component: usize) -> VertexSet {
        let mut out = self.upper_vertices(component);
        out.union_with(&self.components[component].vertices);
        out
    }

    /// Attachments whose lower component is `component`.
    pub fn attachments_of(&self, component: usize) -> impl Iterator<Item = &Attachment> {
        self.attachments
            .iter()
            .filter(move |a| a.lower == component)
    }

    /// The attachment whose upper part contains the vertices of `upper`, for
    /// a strict upper bound `upper` of `lower`.
    pub fn attachment_between(&self, lower: usize, upper: usize) -> Option<&Attachment> {
        let probe = self.components[upper].vertices.first()?;
        self.attachments_of(lower)
            .find(|a| a.up_component.contains(probe))
    }
}

/// Runs the whole pipeline on `graph`: maximum matching, Gallai-Edmonds
/// family, factor-components, Kotzig-Lovász classes, basilica order and
/// attachments.
pub fn decompose(graph: &Graph) -> Result<BasilicaDecomposition> {
    let matching = matching::maximum_matching(graph);
    decompose_with(graph, matching)
}

/// As [`decompose`], using a caller-supplied maximum matching.
pub fn decompose_with(graph: &Graph, matching: Matching) -> Result<BasilicaDecomposition> {
    let family = matching::gallai_edmonds(graph, &matching)?;
    let components = factor_components(graph, &matching, &family)?;
    let classes = kotzig_lovasz(graph, &matching, &family, &components)?;
    let poset = basilica_order(graph, &matching, &components)?;
    let attachments = attachments(graph, &components, &classes, &poset)?;
    BasilicaDecomposition::from_parts(
        graph.clone(),
        matching,
        family,
        components,
        classes,
        poset,
        attachments,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labeled(edges: &[(&str, &str)]) -> Graph {
        Graph::from_labeled_edges(edges.iter().copied()).unwrap()
    }

    fn names(g: &Graph, set: &VertexSet) -> Vec<String> {
        let mut out: Vec<String> = set.iter().map(|v| g.label(v).to_owned()).collect();
        out.sort();
        out
    }

    /// Components as sorted label lists, plus consistency.
    fn components(d: &BasilicaDecomposition) -> Vec<(Vec<String>, bool)> {
        d.components
            .iter()
            .map(|c| (names(&d.graph, &c.vertices), c.consistent))
            .collect()
    }

    fn classes(d: &BasilicaDecomposition) -> Vec<Vec<String>> {
        let mut out: Vec<_> = d
            .classes
            .iter()
            .map(|c| names(&d.graph, &c.vertices))
            .collect();
        out.sort();
        out
    }

    fn id_of(d: &BasilicaDecomposition, label: &str) -> usize {
        d.component_of(d.graph.vertex_by_label(label).unwrap())
    }

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    fn house() -> Graph {
        labeled(&[("a", "b"), ("b", "c"), ("b", "p"), ("p", "q"), ("q", "b")])
    }

    fn kite() -> Graph {
        labeled(&[("u1", "u2"), ("v1", "v2"), ("u1", "v1"), ("u1", "v2")])
    }

    #[test]
    fn factor_components_examples() {
        let p3 = decompose(&labeled(&[("a", "b"), ("b", "c")])).unwrap();
        assert_eq!(components(&p3), vec![(s(&["a", "b", "c"]), false)]);

        let h = decompose(&house()).unwrap();
        assert_eq!(
            components(&h),
            vec![(s(&["a", "b", "c"]), false), (s(&["p", "q"]), true)]
        );

        let mut c4_k2 = crate::graph::GraphBuilder::new();
        for (a, b) in [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1"), ("x", "y")] {
            c4_k2.add_edge(a, b).unwrap();
        }
        let d = decompose(&c4_k2.build()).unwrap();
        assert_eq!(
            components(&d),
            vec![(s(&["1", "2", "3", "4"]), true), (s(&["x", "y"]), true)]
        );
    }

    #[test]
    fn kotzig_lovasz_examples() {
        let c4 = decompose(&labeled(&[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")])).unwrap();
        assert_eq!(classes(&c4), vec![s(&["1", "3"]), s(&["2", "4"])]);

        let p5 = decompose(&labeled(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")])).unwrap();
        assert_eq!(
            classes(&p5),
            vec![s(&["a"]), s(&["b", "d"]), s(&["c"]), s(&["e"])]
        );

        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let d = decompose(&k4).unwrap();
        assert_eq!(d.classes.len(), 4);
        assert!(d.classes.iter().all(|c| c.vertices.len() == 1));
    }

    #[test]
    fn basilica_order_kite() {
        let d = decompose(&kite()).unwrap();
        let (g1, g2) = (id_of(&d, "u1"), id_of(&d, "v1"));
        assert_eq!(d.poset.upper_set(g1).collect::<Vec<_>>(), vec![g1, g2]);
        assert_eq!(d.poset.upper_set(g2).collect::<Vec<_>>(), vec![g2]);
        assert_eq!(d.poset.hasse_edges(), &[(g1, g2)]);
    }

    #[test]
    fn basilica_order_house() {
        let d = decompose(&house()).unwrap();
        let (low, high) = (id_of(&d, "a"), id_of(&d, "p"));
        assert!(d.poset.leq(low, high));
        assert!(!d.poset.leq(high, low));
        assert_eq!(d.poset.hasse_edges(), &[(low, high)]);
    }

    #[test]
    fn basilica_order_two_k2() {
        let d = decompose(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()).unwrap();
        assert!(d.poset.hasse_edges().is_empty());
        for c in 0..2 {
            assert!(d.poset.is_minimal(c) && d.poset.is_maximal(c));
        }
    }

    #[test]
    fn attachments_examples() {
        let d = decompose(&kite()).unwrap();
        assert_eq!(d.attachments.len(), 1);
        let att = &d.attachments[0];
        assert_eq!(att.lower, id_of(&d, "u1"));
        assert_eq!(names(&d.graph, &att.up_component), s(&["v1", "v2"]));
        assert_eq!(names(&d.graph, &d.classes[att.class].vertices), s(&["u1"]));

        let d = decompose(&house()).unwrap();
        assert_eq!(d.attachments.len(), 1);
        let att = &d.attachments[0];
        assert_eq!(names(&d.graph, &att.up_component), s(&["p", "q"]));
        assert_eq!(names(&d.graph, &d.classes[att.class].vertices), s(&["b"]));

        // Nothing above a maximal component.
        assert_eq!(d.attachments_of(id_of(&d, "p")).count(), 0);
    }

    #[test]
    fn decompose_examples() {
        let tri = decompose(&labeled(&[("a", "b"), ("b", "c"), ("c", "a")])).unwrap();
        assert_eq!(components(&tri), vec![(s(&["a", "b", "c"]), false)]);
        assert_eq!(classes(&tri), vec![s(&["a"]), s(&["b"]), s(&["c"])]);
        assert_eq!(tri.poset.len(), 1);

        let c4 = decompose(&labeled(&[("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")])).unwrap();
        assert_eq!(components(&c4), vec![(s(&["1", "2", "3", "4"]), true)]);
        assert_eq!(c4.poset.len(), 1);
    }

    #[test]
    fn decompose_empty_graph() {
        let d = decompose(&Graph::empty(0)).unwrap();
        assert!(d.components.is_empty() && d.classes.is_empty() && d.attachments.is_empty());
        assert_eq!(d.deficiency(), 0);
    }

    #[test]
    fn isolated_vertex_is_its_own_class() {
        let d = decompose(&Graph::empty(2)).unwrap();
        assert_eq!(d.components.len(), 2);
        assert!(d.components.iter().all(|c| !c.consistent));
        assert_eq!(d.classes.len(), 2);
    }
}
