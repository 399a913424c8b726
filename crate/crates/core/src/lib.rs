//! Exact computation of zero forcing invariants of finite simple graphs:
//! the color-change dynamical system, the zero forcing number Z(G) and
//! iteration index I(G) by exhaustive subset search, chronological lists
//! and forcing chains, closed-form verification per family, and the
//! cycle-product conjecture sweep.

mod bits;
pub mod bounds;
pub mod chains;
pub mod conjecture;
pub mod edgelist;
pub mod error;
pub mod expected;
pub mod family;
pub mod forcing;
pub mod graph;
pub mod pathcover;
pub mod report;
pub mod solver;
pub mod substitution;
pub mod trees;
pub mod vertexset;
pub mod witness;

pub use error::{EdgeListError, GraphError, SolverError};
pub use family::FamilySpec;
pub use graph::Graph;
pub use solver::{Solution, SolverConfig};
pub use vertexset::VertexSet;
