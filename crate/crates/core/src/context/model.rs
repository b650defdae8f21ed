use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::bits::Bits;
use crate::graph::VertexId;

use super::{ContextError, ModelParams};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexOutcome<V> {
    pub label: V,
    pub degree: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeTarget {
    Fresh,
    Close(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeOutcome<E> {
    pub label: E,
    pub target: EdgeTarget,
}

impl<V: fmt::Display> fmt::Display for VertexOutcome<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.label, self.degree)
    }
}

impl<E: fmt::Display> fmt::Display for EdgeOutcome<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.target {
            EdgeTarget::Fresh => write!(f, "{}:fresh", self.label),
            EdgeTarget::Close(v) => write!(f, "{}:close({v})", self.label),
        }
    }
}

/// A finite distribution, stored as unnormalised weights.
#[derive(Debug, Clone)]
pub struct PredictiveModel<O> {
    outcomes: Vec<O>,
    weights: Vec<f64>,
    total: f64,
    index: HashMap<O, usize>,
}

impl<O: Clone + Eq + Hash> PredictiveModel<O> {
    pub fn outcomes(&self) -> &[O] {
        &self.outcomes
    }

    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }

    /// `None` for values outside the outcome space.
    pub fn probability(&self, outcome: &O) -> Option<f64> {
        self.index
            .get(outcome)
            .map(|&i| self.weights[i] / self.total)
    }

    pub fn nlpr(&self, outcome: &O) -> Option<Bits> {
        self.probability(outcome).map(Bits::from_probability)
    }

    /// Sum of all probabilities; 1 up to rounding.
    pub fn mass(&self) -> f64 {
        self.weights.iter().map(|w| w / self.total).sum()
    }
}

/// Turns votes into a distribution over `outcomes`.
///
/// Each outcome starts with `params.escape_weight`; each vote for an
/// outcome in the space adds `score + params.match_weight`. Votes for
/// values outside the space are ignored.
pub fn scored_matches_to_model<O: Clone + Eq + Hash>(
    outcomes: Vec<O>,
    votes: impl IntoIterator<Item = (O, u32)>,
    params: &ModelParams,
) -> Result<PredictiveModel<O>, ContextError> {
    if outcomes.is_empty() {
        return Err(ContextError::EmptyOutcomeSpace);
    }
    let index: HashMap<O, usize> = outcomes
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, o)| (o, i))
        .collect();
    let mut weights = vec![params.escape_weight; outcomes.len()];
    for (outcome, score) in votes {
        if let Some(&i) = index.get(&outcome) {
            weights[i] += f64::from(score) + params.match_weight;
        }
    }
    let total = weights.iter().sum();
    Ok(PredictiveModel {
        outcomes,
        weights,
        total,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> ModelParams {
        ModelParams::default()
    }

    #[test]
    fn no_votes_is_uniform() {
        let m = scored_matches_to_model(vec!['a', 'b', 'c', 'd'], [], &params()).unwrap();
        for o in ['a', 'b', 'c', 'd'] {
            assert_eq!(m.nlpr(&o), Some(Bits(2.0)));
        }
        assert_eq!(m.probability(&'z'), None);
    }

    #[test]
    fn empty_space_is_an_error() {
        assert!(matches!(
            scored_matches_to_model(Vec::<u8>::new(), [], &params()),
            Err(ContextError::EmptyOutcomeSpace)
        ));
    }

    #[test]
    fn single_vote_dominates_and_grows_with_score() {
        let space = vec![0u8, 1, 2];
        let mut last = 0.0;
        for score in 0..10 {
            let m = scored_matches_to_model(space.clone(), [(1u8, score)], &params()).unwrap();
            let p = m.probability(&1).unwrap();
            // escape 0.5 each, vote adds score + 1
            let expected = (0.5 + score as f64 + 1.0) / (1.5 + score as f64 + 1.0);
            assert!((p - expected).abs() < 1e-12);
            assert!(p > m.probability(&0).unwrap());
            assert!(p > last);
            last = p;
            assert!((m.mass() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn votes_outside_space_are_ignored() {
        let m = scored_matches_to_model(vec![0u8, 1], [(7u8, 5)], &params()).unwrap();
        assert_eq!(m.probability(&0), Some(0.5));
    }

    #[test]
    fn rendering() {
        let v = VertexOutcome {
            label: "C",
            degree: 3,
        };
        assert_eq!(v.to_string(), "C:3");
        let e = EdgeOutcome {
            label: "=",
            target: EdgeTarget::Close(4),
        };
        assert_eq!(e.to_string(), "=:close(4)");
    }
}
