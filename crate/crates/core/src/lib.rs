//! Vertex-minors, pivot-minors and the depth parameters that bound them.
//!
//! Graphs have at most 64 vertices and store one adjacency bitmask per row.
//! Exhaustive searches carry their own, smaller, capacity limits and report
//! [`Error::Capacity`] beyond them.

pub mod canon;
pub mod colouring;
pub mod constructions;
pub mod depth;
pub mod enumerate;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod graph6;
pub mod minors;
pub mod selftest;

pub use error::{Error, Result};
pub use graph::{disjoint_union, DisjointUnion, Graph, VertexSet, MAX_VERTICES};
