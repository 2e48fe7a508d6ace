//! Bipartite (1,1,k)-mixed graphs: every vertex has at most one undirected
//! edge and at most one out-going arc, and all adjacencies cross a fixed
//! bipartition.
//!
//! The crate provides the graph model ([`graph`]), distance metrics
//! ([`metrics`]), order bounds ([`bounds`]), the known constructions
//! ([`families`]), the spectrum of the 20-vertex lift ([`spectral`]) and
//! exhaustive / voltage-lift searches ([`search`]).

pub mod bounds;
pub mod canon;
pub mod cli;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod metrics;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::MixedGraph;
pub use metrics::Distance;
