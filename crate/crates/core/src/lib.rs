//! Exact tools for generalized Turán problems with a bounded matching
//! number: graphs and graph6, clique and subgraph counting, matchings, the
//! named extremal constructions, an exhaustive extremal search, and a check
//! harness that compares closed forms with search results.

pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod oracle;
pub mod subgraph;

pub use error::{Error, Result};
pub use graph::graph6::{decode_graph6, encode_graph6};
pub use graph::{build_graph, ConstructionExpr, Graph};
