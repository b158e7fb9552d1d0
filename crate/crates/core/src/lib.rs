//! Order supergraphs of finite groups and line graph recognition.
//!
//! The crate builds finite groups from family presentations or Cayley
//! tables ([`group`]), turns them into power graphs and order supergraphs
//! ([`supergraph`]), decides whether a graph is a line graph or the
//! complement of one by forbidden induced subgraph search ([`recognition`]),
//! and compares those verdicts with group-theoretic predictions
//! ([`oracle`], [`census`]).

pub mod arith;
pub mod census;
pub mod error;
pub mod graph;
pub mod group;
pub mod oracle;
pub mod recognition;
pub mod supergraph;

pub use error::{Axiom, Error, Result};
pub use graph::{Embedding, Graph};
pub use group::{FiniteGroup, GroupSpec, OrderProfile};
pub use recognition::{is_complement_of_line_graph, is_line_graph, RecognitionVerdict};
pub use supergraph::{LabeledGroupGraph, Variant};
