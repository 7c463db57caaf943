//! Exact enumeration of inclusion-minimal vertex cuts and u,v-separators
//! in small graphs, together with the machinery to study how many a graph
//! can have: extremal constructions whose separator families multiply,
//! entropy-based counting bounds, and an isomorph-free census over all
//! graphs of a given order.
//!
//! The crate is organized around a compact graph representation
//! ([`graph::Graph`], adjacency as per-vertex bit masks, at most 64
//! vertices) and grows outward:
//!
//! * [`separator`] — decide, enumerate, and count minimal separators and
//!   minimal vertex cuts, with a brute-force oracle next to the fast
//!   enumerator;
//! * [`construct`] — two-terminal constructions (parallel length-4 paths,
//!   terminal gluing) realizing `3^m` separators on `3m + 2` vertices;
//! * [`bounds`] — exact binomial-sum upper bounds and the
//!   `3^(1/3)`…`2^H(1/3)` bracket they pin down;
//! * [`census`] — isomorph-free generation of all small graphs and exact
//!   maxima of separator and cut counts, with checkpointed parallel runs.

pub mod bounds;
pub mod census;
pub mod construct;
pub mod graph;
pub mod graph6;
pub mod separator;
pub mod set;

mod hash;

pub use graph::{Graph, GraphError};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use set::VertexSet;
