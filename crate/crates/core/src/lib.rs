#![no_std]

//! Constellations, induced complete-bipartite minor models, and the exact
//! small-scale machinery used to check their structural properties.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line front-end, and the verification suites live in the `constel` crate.

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod constellation;
pub mod contraction;
pub mod generators;
pub mod graph;
pub mod hypergraph;
pub mod models;
pub mod order;
pub mod search;
pub mod sequences;
pub mod width;

pub use constellation::{Constellation, ConstellationError, Route};
pub use graph::{Graph, GraphError, PathWitness, VertexSet};
pub use hypergraph::Hypergraph;
pub use models::InducedModel;
pub use order::{ApexOrder, OrderMode};
pub use search::{Budget, SearchOutcome};
pub use sequences::IndexSequence;
pub use width::WidthResult;
