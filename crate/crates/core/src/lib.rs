//! Information content of labelled graphs.
//!
//! Baseline codes for adjacency structure and trees, an ordering surplus
//! from automorphism counts, and a context-matching estimate of the bits
//! needed to send a graph given background graphs the receiver already has.
//! A small SMILES reader turns molecules into labelled graphs.

pub mod bits;
pub mod codes;
pub mod context;
pub mod graph;
pub mod samples;
pub mod smiles;
pub mod traverse;

pub use bits::{Bits, CodeReport};
pub use context::{information_content, ContextModel, MaxDegreeMap, ModelParams};
pub use graph::{Graph, GraphError, Label};
