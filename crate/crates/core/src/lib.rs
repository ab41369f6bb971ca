//! Exact tools for hereditary graph classes defined by their induced cycles.

pub mod bitset;
pub mod canon;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod holes;
pub mod invariants;
pub mod lab;
pub mod levelling;
mod masks;
pub mod perfection;

pub use bitset::VertexSet;
pub use error::{GraphError, SolveError};
pub use graph::Graph;
