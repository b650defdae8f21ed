use crate::bits::{Bits, CodeReport};
use crate::graph::{max_edges, Graph, Label};

use super::CodesError;

/// One bit per adjacency-matrix cell.
pub fn naive_bits<V: Label, E: Label>(g: &Graph<V, E>) -> Bits {
    Bits(max_edges(g.vertex_count(), g.is_directed(), false) as f64)
}

/// Length of a binary sequence with `k` ones in `n` under the adaptive
/// (successor rule) code: `log2(n+1) + log2 C(n,k)`.
pub fn adaptive_binomial_bits(n: u64, k: u64) -> Result<Bits, CodesError> {
    if k > n {
        return Err(CodesError::BinomialOutOfRange { n, k });
    }
    Ok(Bits(
        ((n + 1) as f64).log2() + log2_binomial(n, k.min(n - k)),
    ))
}

fn log2_binomial(n: u64, k: u64) -> f64 {
    (1..=k)
        .map(|i| ((n - k + i) as f64 / i as f64).log2())
        .sum()
}

/// Homogeneous edge density over the strict upper triangle.
pub fn undirected_matrix_bits<V: Label, E: Label>(
    g: &Graph<V, E>,
) -> Result<CodeReport, CodesError> {
    if g.is_directed() {
        return Err(CodesError::WrongKind {
            expected: "undirected",
        });
    }
    let cells = max_edges(g.vertex_count(), false, false) as u64;
    let bits = adaptive_binomial_bits(cells, g.edge_count() as u64)?;
    Ok(CodeReport::new(
        "adaptive binomial, upper triangle",
        vec![(format!("{} edges in {} cells", g.edge_count(), cells), bits)],
    ))
}

/// One adaptive binomial per adjacency-matrix row (out-edge density per
/// vertex).
pub fn directed_row_binomial_bits<V: Label, E: Label>(
    g: &Graph<V, E>,
) -> Result<CodeReport, CodesError> {
    if !g.is_directed() {
        return Err(CodesError::WrongKind {
            expected: "directed",
        });
    }
    let n = g.vertex_count();
    let cells = n.saturating_sub(1) as u64;
    let items = (0..n)
        .map(|u| {
            let bits = adaptive_binomial_bits(cells, g.degree(u) as u64)?;
            Ok((format!("row {u}: {} of {cells}", g.degree(u)), bits))
        })
        .collect::<Result<Vec<_>, CodesError>>()?;
    Ok(CodeReport::new("adaptive binomial per row", items))
}
