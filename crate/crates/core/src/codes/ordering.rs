//! Automorphism counting and the information carried by an arbitrary
//! vertex ordering, `log2(|V|! / |A|)`.

use crate::bits::Bits;
use crate::graph::{Graph, Label};

use super::CodesError;

/// 9! permutations is the most the brute-force search will face.
pub const DEFAULT_AUTOMORPHISM_LIMIT: usize = 9;

pub fn automorphism_count<V: Label, E: Label>(g: &Graph<V, E>) -> Result<u64, CodesError> {
    automorphism_count_with_limit(g, DEFAULT_AUTOMORPHISM_LIMIT)
}

/// Counts vertex permutations that preserve vertex labels, adjacency and
/// edge labels, by backtracking over partial maps.
pub fn automorphism_count_with_limit<V: Label, E: Label>(
    g: &Graph<V, E>,
    limit: usize,
) -> Result<u64, CodesError> {
    let n = g.vertex_count();
    if n > limit {
        return Err(CodesError::TooManyVertices { count: n, limit });
    }
    // cell[u * n + v] = label of the edge u -> v (both ways when undirected)
    let mut cell: Vec<Option<&E>> = vec![None; n * n];
    for edge in g.edges() {
        cell[edge.u * n + edge.v] = Some(&edge.label);
        if !g.is_directed() {
            cell[edge.v * n + edge.u] = Some(&edge.label);
        }
    }
    let signature: Vec<(usize, usize)> = (0..n)
        .map(|v| {
            let out = (0..n).filter(|&w| cell[v * n + w].is_some()).count();
            let inc = (0..n).filter(|&w| cell[w * n + v].is_some()).count();
            (out, inc)
        })
        .collect();

    struct Search<'a, V, E> {
        g: &'a Graph<V, E>,
        n: usize,
        cell: Vec<Option<&'a E>>,
        signature: Vec<(usize, usize)>,
        image: Vec<usize>,
        used: Vec<bool>,
    }

    impl<V: Label, E: Label> Search<'_, V, E> {
        fn count(&mut self, depth: usize) -> u64 {
            if depth == self.n {
                return 1;
            }
            let n = self.n;
            let mut total = 0;
            for target in 0..n {
                if self.used[target]
                    || self.g.label(target) != self.g.label(depth)
                    || self.signature[target] != self.signature[depth]
                {
                    continue;
                }
                let consistent = (0..depth).all(|w| {
                    let iw = self.image[w];
                    self.cell[depth * n + w] == self.cell[target * n + iw]
                        && self.cell[w * n + depth] == self.cell[iw * n + target]
                });
                if !consistent {
                    continue;
                }
                self.image[depth] = target;
                self.used[target] = true;
                total += self.count(depth + 1);
                self.used[target] = false;
            }
            total
        }
    }

    let mut search = Search {
        g,
        n,
        cell,
        signature,
        image: vec![0; n],
        used: vec![false; n],
    };
    Ok(search.count(0))
}

pub fn ordering_surplus_bits<V: Label, E: Label>(g: &Graph<V, E>) -> Result<Bits, CodesError> {
    ordering_surplus_bits_with_limit(g, DEFAULT_AUTOMORPHISM_LIMIT)
}

/// `log2(|V|!) - log2(|A|)`, the amount to subtract from any
/// ordering-dependent encoding of `g`.
pub fn ordering_surplus_bits_with_limit<V: Label, E: Label>(
    g: &Graph<V, E>,
    limit: usize,
) -> Result<Bits, CodesError> {
    let automorphisms = automorphism_count_with_limit(g, limit)?;
    let orderings: u64 = (1..=g.vertex_count() as u64).product();
    debug_assert_eq!(orderings % automorphisms, 0);
    Ok(Bits(((orderings / automorphisms) as f64).log2()))
}
