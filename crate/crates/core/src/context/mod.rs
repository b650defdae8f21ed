//! Conditional information content by context matching.
//!
//! The target graph is traversed depth first. Before each vertex or edge is
//! revealed, its known context (closed edges and known vertices) is matched
//! against every background graph. The scored matches vote for the outcome
//! their background counterpart exhibits, a uniform escape share keeps every
//! outcome codable, and the negative log probability of the actual outcome
//! is charged for the step. With no background the model is uniform over
//! the outcome space, giving the unconditional estimate.

mod info;
mod matching;
mod model;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{GraphError, Label, VertexId};

pub use info::{
    chain_information, conditional_table, information_content, ChainReport, ConditionalTable,
    InfoResult, StepKind, StepRecord,
};
pub use matching::{edge_matches, vertex_matches, ContextMatcher, Correspondence, ScoredMatch};
pub use model::{scored_matches_to_model, EdgeOutcome, EdgeTarget, PredictiveModel, VertexOutcome};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ContextError {
    #[error("vertex {vertex} has label {label}, which has no maximum degree")]
    MissingDegree { vertex: VertexId, label: String },
    #[error("vertex {vertex} ({label}) has degree {degree}, above its maximum {max}")]
    DegreeExceeded {
        vertex: VertexId,
        label: String,
        degree: usize,
        max: usize,
    },
    #[error("edge {edge} has label {label}, which is not in the edge alphabet")]
    UnknownEdgeLabel { edge: usize, label: String },
    #[error("maximum degree for {label} must be at least 1")]
    ZeroDegree { label: String },
    #[error("the outcome space is empty")]
    EmptyOutcomeSpace,
    #[error("the target graph is not connected; split it into components first")]
    NotConnected,
    #[error("invalid model parameters: {0}")]
    InvalidParameters(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Upper bound on the degree of each vertex label. Its keys are the vertex
/// alphabet of the model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxDegreeMap<V: Ord>(BTreeMap<V, usize>);

impl<V: Label> MaxDegreeMap<V> {
    pub fn new() -> Self {
        MaxDegreeMap(BTreeMap::new())
    }

    pub fn insert(&mut self, label: V, max: usize) -> Result<(), ContextError> {
        if max == 0 {
            return Err(ContextError::ZeroDegree {
                label: format!("{label:?}"),
            });
        }
        self.0.insert(label, max);
        Ok(())
    }

    pub fn get(&self, label: &V) -> Option<usize> {
        self.0.get(label).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&V, usize)> {
        self.0.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<V: Label> Default for MaxDegreeMap<V> {
    fn default() -> Self {
        Self::new()
    }
}

impl<V: Label> FromIterator<(V, usize)> for MaxDegreeMap<V> {
    /// Zero entries are dropped.
    fn from_iter<I: IntoIterator<Item = (V, usize)>>(iter: I) -> Self {
        MaxDegreeMap(iter.into_iter().filter(|&(_, d)| d > 0).collect())
    }
}

/// Default match radius.
pub const DEFAULT_DEPTH: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Match radius in edge hops from the element being predicted.
    pub depth: usize,
    /// Added to every admissible match's score, so zero-score matches vote.
    pub match_weight: f64,
    /// Pseudo-weight given to every outcome.
    pub escape_weight: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams {
            depth: DEFAULT_DEPTH,
            match_weight: 1.0,
            escape_weight: 0.5,
        }
    }
}

impl ModelParams {
    fn validate(&self) -> Result<(), ContextError> {
        if !(self.escape_weight.is_finite() && self.escape_weight > 0.0) {
            return Err(ContextError::InvalidParameters(
                "escape weight must be positive",
            ));
        }
        if !(self.match_weight.is_finite() && self.match_weight >= 0.0) {
            return Err(ContextError::InvalidParameters(
                "match weight must be non-negative",
            ));
        }
        Ok(())
    }
}

/// Alphabets, degree bounds and weighting shared by every prediction.
#[derive(Debug, Clone, PartialEq)]
pub struct ContextModel<V: Ord, E> {
    pub degrees: MaxDegreeMap<V>,
    pub edge_labels: Vec<E>,
    pub params: ModelParams,
}

impl<V: Label, E: Label> ContextModel<V, E> {
    pub fn new(degrees: MaxDegreeMap<V>, edge_labels: impl IntoIterator<Item = E>) -> Self {
        let mut edge_labels: Vec<E> = edge_labels.into_iter().collect();
        edge_labels.sort();
        edge_labels.dedup();
        ContextModel {
            degrees,
            edge_labels,
            params: ModelParams::default(),
        }
    }

    pub fn with_depth(mut self, depth: usize) -> Self {
        self.params.depth = depth;
        self
    }

    pub fn with_params(mut self, params: ModelParams) -> Self {
        self.params = params;
        self
    }
}
