//! Closed-form code lengths: adjacency-matrix models, tree codecs, and the
//! vertex-ordering correction.

mod matrix;
mod ordering;
mod tree;

use thiserror::Error;

pub use matrix::{
    adaptive_binomial_bits, directed_row_binomial_bits, naive_bits, undirected_matrix_bits,
};
pub use ordering::{
    automorphism_count, automorphism_count_with_limit, ordering_surplus_bits,
    ordering_surplus_bits_with_limit, DEFAULT_AUTOMORPHISM_LIMIT,
};
pub use tree::{GeneralTree, StrictBinaryTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodesError {
    #[error("binomial success count {k} exceeds trial count {n}")]
    BinomialOutOfRange { n: u64, k: u64 },
    #[error("this code needs a {expected} graph")]
    WrongKind { expected: &'static str },
    #[error("graph has {count} vertices; brute-force automorphism counting is limited to {limit}")]
    TooManyVertices { count: usize, limit: usize },
    #[error("unexpected symbol {symbol:?} at position {position}")]
    InvalidSymbol { symbol: char, position: usize },
    #[error("codeword ends before the tree is complete")]
    Truncated,
    #[error("codeword continues past the end of the tree at position {position}")]
    Trailing { position: usize },
}
