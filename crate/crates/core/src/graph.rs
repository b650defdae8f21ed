//! Immutable labelled graphs.
//!
//! Vertices are identified by dense ids `0..n`. An id only identifies a
//! vertex; it carries no information of its own. Self-loops and parallel
//! edges are rejected at construction time.

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Anything usable as a vertex or edge label.
///
/// The unlabelled case is served by `()`.
pub trait Label: Clone + Ord + Hash + Debug + Send + Sync {}

impl<T: Clone + Ord + Hash + Debug + Send + Sync> Label for T {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} is a self-loop on vertex {vertex}")]
    SelfLoop { index: usize, vertex: VertexId },
    #[error("edge {index} duplicates an earlier edge between {u} and {v}")]
    DuplicateEdge {
        index: usize,
        u: VertexId,
        v: VertexId,
    },
    #[error("edge {index} references vertex {vertex}, but the graph has {count} vertices")]
    VertexOutOfRange {
        index: usize,
        vertex: VertexId,
        count: usize,
    },
    #[error("root {root} is out of range for a graph with {count} vertices")]
    RootOutOfRange { root: VertexId, count: usize },
    #[error("operation requires an undirected graph")]
    Directed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge<E> {
    pub u: VertexId,
    pub v: VertexId,
    pub label: E,
}

impl<E> Edge<E> {
    /// The endpoint opposite `w`. Assumes `w` is an endpoint.
    pub fn other(&self, w: VertexId) -> VertexId {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph<V, E> {
    directed: bool,
    labels: Vec<V>,
    edges: Vec<Edge<E>>,
    // Undirected: all incident edges. Directed: outgoing edges only.
    adjacency: Vec<Vec<EdgeId>>,
}

impl<V: Label, E: Label> Graph<V, E> {
    /// Validates and builds a graph. Adjacency lists keep the input edge
    /// order, which fixes traversal order.
    pub fn build(
        directed: bool,
        labels: Vec<V>,
        edges: impl IntoIterator<Item = (VertexId, VertexId, E)>,
    ) -> Result<Self, GraphError> {
        let count = labels.len();
        let mut seen = HashSet::new();
        let mut adjacency = vec![Vec::new(); count];
        let mut stored = Vec::new();
        for (index, (u, v, label)) in edges.into_iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= count {
                    return Err(GraphError::VertexOutOfRange {
                        index,
                        vertex,
                        count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            let key = if directed {
                (u, v)
            } else {
                (u.min(v), u.max(v))
            };
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge { index, u, v });
            }
            let id = stored.len();
            adjacency[u].push(id);
            if !directed {
                adjacency[v].push(id);
            }
            stored.push(Edge { u, v, label });
        }
        Ok(Graph {
            directed,
            labels,
            edges: stored,
            adjacency,
        })
    }

    pub fn undirected(
        labels: Vec<V>,
        edges: impl IntoIterator<Item = (VertexId, VertexId, E)>,
    ) -> Result<Self, GraphError> {
        Self::build(false, labels, edges)
    }

    pub fn directed(
        labels: Vec<V>,
        edges: impl IntoIterator<Item = (VertexId, VertexId, E)>,
    ) -> Result<Self, GraphError> {
        Self::build(true, labels, edges)
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: VertexId) -> &V {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[V] {
        &self.labels
    }

    pub fn edge(&self, e: EdgeId) -> &Edge<E> {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge<E>] {
        &self.edges
    }

    /// Incident edges of `v` (outgoing edges for directed graphs), in
    /// adjacency order.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adjacency[v]
    }

    /// Degree for undirected graphs, out-degree for directed ones.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.adjacency[u].iter().copied().find(|&e| {
            let edge = &self.edges[e];
            if self.directed {
                edge.v == v
            } else {
                edge.other(u) == v
            }
        })
    }

    pub fn map_labels<V2: Label, E2: Label>(
        &self,
        mut vertex: impl FnMut(&V) -> V2,
        mut edge: impl FnMut(&E) -> E2,
    ) -> Graph<V2, E2> {
        Graph {
            directed: self.directed,
            labels: self.labels.iter().map(&mut vertex).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    u: e.u,
                    v: e.v,
                    label: edge(&e.label),
                })
                .collect(),
            adjacency: self.adjacency.clone(),
        }
    }
}

/// A connected component re-indexed densely, with the map back to the
/// original vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component<V, E> {
    pub graph: Graph<V, E>,
    pub original: Vec<VertexId>,
}

/// Splits `g` into components, ordered by their smallest original vertex id.
/// Directed graphs are split into weakly connected components.
pub fn connected_components<V: Label, E: Label>(g: &Graph<V, E>) -> Vec<Component<V, E>> {
    let n = g.vertex_count();
    let mut neighbours = vec![Vec::new(); n];
    for edge in g.edges() {
        neighbours[edge.u].push(edge.v);
        neighbours[edge.v].push(edge.u);
    }
    let mut component_of = vec![usize::MAX; n];
    let mut members: Vec<Vec<VertexId>> = Vec::new();
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        let c = members.len();
        let mut group = vec![start];
        component_of[start] = c;
        let mut i = 0;
        while i < group.len() {
            for &w in &neighbours[group[i]] {
                if component_of[w] == usize::MAX {
                    component_of[w] = c;
                    group.push(w);
                }
            }
            i += 1;
        }
        group.sort_unstable();
        members.push(group);
    }

    let mut local = vec![0; n];
    for group in &members {
        for (i, &v) in group.iter().enumerate() {
            local[v] = i;
        }
    }
    let mut edges: Vec<Vec<(VertexId, VertexId, E)>> = vec![Vec::new(); members.len()];
    for edge in g.edges() {
        edges[component_of[edge.u]].push((local[edge.u], local[edge.v], edge.label.clone()));
    }
    members
        .into_iter()
        .zip(edges)
        .map(|(group, edges)| {
            let labels = group.iter().map(|&v| g.label(v).clone()).collect();
            let graph = Graph::build(g.is_directed(), labels, edges)
                .expect("a component of a valid graph is valid");
            Component {
                graph,
                original: group,
            }
        })
        .collect()
}

/// Maximum number of edges on `n` vertices.
pub fn max_edges(n: usize, directed: bool, self_loops: bool) -> usize {
    match (directed, self_loops) {
        (false, false) => n * n.saturating_sub(1) / 2,
        (false, true) => n * (n + 1) / 2,
        (true, false) => n * n.saturating_sub(1),
        (true, true) => n * n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph<(), ()> {
        Graph::undirected(vec![(); n], (1..n).map(|i| (i - 1, i, ()))).unwrap()
    }

    #[test]
    fn empty_graph() {
        let g: Graph<(), ()> = Graph::undirected(vec![], vec![]).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
        assert!(connected_components(&g).is_empty());
    }

    #[test]
    fn rejects_self_loop() {
        let err = Graph::undirected(vec![()], vec![(0, 0, ())]).unwrap_err();
        assert_eq!(
            err,
            GraphError::SelfLoop {
                index: 0,
                vertex: 0
            }
        );
    }

    #[test]
    fn rejects_duplicates() {
        let err = Graph::undirected(vec![(); 2], vec![(0, 1, ()), (1, 0, ())]).unwrap_err();
        assert_eq!(
            err,
            GraphError::DuplicateEdge {
                index: 1,
                u: 1,
                v: 0
            }
        );
        // Antiparallel arcs are distinct in a directed graph.
        assert!(Graph::directed(vec![(); 2], vec![(0, 1, ()), (1, 0, ())]).is_ok());
    }

    #[test]
    fn rejects_out_of_range() {
        let err = Graph::undirected(vec![(); 2], vec![(0, 2, ())]).unwrap_err();
        assert_eq!(
            err,
            GraphError::VertexOutOfRange {
                index: 0,
                vertex: 2,
                count: 2
            }
        );
    }

    #[test]
    fn adjacency_keeps_input_order() {
        let g = Graph::undirected(
            vec![0u8, 1, 2, 3],
            vec![(0, 3, 'a'), (0, 1, 'b'), (2, 0, 'c')],
        )
        .unwrap();
        assert_eq!(g.incident(0), &[0, 1, 2]);
        assert_eq!(g.incident(3), &[0]);
        assert_eq!(g.find_edge(0, 2), Some(2));
        assert_eq!(g.find_edge(1, 2), None);
    }

    #[test]
    fn two_disjoint_edges_split() {
        let g = Graph::undirected(vec!['a', 'b', 'c', 'd'], vec![(0, 2, 1), (1, 3, 2)]).unwrap();
        let parts = connected_components(&g);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].original, vec![0, 2]);
        assert_eq!(parts[1].original, vec![1, 3]);
        assert_eq!(parts[1].graph.labels(), &['b', 'd']);
        assert_eq!(
            parts[1].graph.edges()[0],
            Edge {
                u: 0,
                v: 1,
                label: 2
            }
        );
    }

    #[test]
    fn connected_graph_is_one_component() {
        let parts = connected_components(&path(5));
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].graph, path(5));
    }

    #[test]
    fn max_edges_table() {
        assert_eq!(max_edges(4, false, false), 6);
        assert_eq!(max_edges(3, true, true), 9);
        assert_eq!(max_edges(4, false, true), 10);
        assert_eq!(max_edges(3, true, false), 6);
        for d in [false, true] {
            for s in [false, true] {
                assert_eq!(max_edges(0, d, s), 0);
            }
        }
    }
}
