//! Graph constructions, exact counting and small-scale extremal search.

pub mod bitset;
pub mod canon;
pub mod constructions;
pub mod counting;
pub mod graph;
pub mod io;
pub mod procedures;
pub mod random;
pub mod search;
pub mod suites;

pub use bitset::VertexSet;
pub use graph::{BipartiteGraph, Graph, GraphError, RootedGraph, Vertex};
