//! Basilica decomposition of undirected graphs.
//!
//! Starting from a maximum matching, the crate computes the Gallai-Edmonds
//! family `D, A, C`, the factor-components (maximal subgraphs connected
//! through allowed edges), the Kotzig-Lovász partition of the vertex set,
//! the basilica partial order on factor-components and the attachment map
//! that ties the order to the partition. Everything except the Hasse
//! diagram runs in `O(nm)`.
//!
//! ```
//! use basilica::{decompose, Graph};
//!
//! // A triangle with a pendant path: b is the only vertex of A.
//! let g = Graph::from_labeled_edges([("a", "b"), ("b", "c"), ("b", "p"), ("p", "q"), ("q", "b")])?;
//! let d = decompose(&g)?;
//! assert_eq!(d.deficiency(), 1);
//! assert_eq!(d.components.len(), 2);
//! assert_eq!(d.poset.hasse_edges().len(), 1);
//! # Ok::<(), basilica::Error>(())
//! ```
//!
//! [`oracle`] evaluates the same notions straight from their definitions on
//! small graphs; [`verify`] compares the two.

pub mod cli;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod verify;

pub use decomposition::{
    decompose, decompose_with, Attachment, BasilicaDecomposition, BasilicaPoset, FactorComponent,
    KotzigLovaszClass,
};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, VertexId, VertexSet};
pub use matching::{gallai_edmonds, maximum_matching, GallaiEdmondsFamily, Matching};
