//! Neighbourhood Zagreb index `M_N(G) = Σ δ(v)²`, where `δ(v)` is the sum of
//! the degrees of the neighbours of `v`, together with:
//!
//! * the classic degree, distance and counting indices it is compared with,
//! * Cartesian, tensor and wreath product constructors,
//! * closed forms for `M_N` of product graphs, and a verifier that checks
//!   each one against direct computation on the constructed graph,
//! * an alkane-name parser and the octane QSPR dataset.

pub mod alkane;
pub mod closed_forms;
pub mod families;
pub mod graph;
pub mod indices;
pub mod products;
pub mod qspr;
pub mod verify;

pub use graph::{Graph, GraphError, Vertex, VertexStats};
pub use indices::{IndexId, IndexValue};
pub use products::ProductKind;
