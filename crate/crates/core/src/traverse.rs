//! Depth-first traversal of an undirected graph as a stream of vertex and
//! edge events.
//!
//! Every vertex starts `Unvisited`, becomes `Visiting` when first reached
//! and is pushed on the visiting stack, and becomes `Visited` when it is
//! popped. The vertex on top of the stack always takes its first open edge
//! in adjacency order; it is popped once none remain.
//!
//! The callback for an event runs before the state change that event
//! causes, so it sees exactly what a decoder replaying the stream knows.

use crate::graph::{EdgeId, Graph, GraphError, Label, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Unvisited,
    Visiting,
    Visited,
}

/// An edge oriented away from `from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeRef {
    pub edge: EdgeId,
    pub from: VertexId,
    pub to: VertexId,
}

impl EdgeRef {
    pub fn reversed(self) -> EdgeRef {
        EdgeRef {
            edge: self.edge,
            from: self.to,
            to: self.from,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexEvent {
    pub vertex: VertexId,
    pub degree: usize,
    /// The arrival edge reversed, pointing from this vertex back to the one
    /// it was reached from. `None` for the root.
    pub incoming: Option<EdgeRef>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    /// The far endpoint was unvisited; its vertex event follows.
    Fresh(VertexId),
    /// The far endpoint was already on the visiting stack.
    Close(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeEvent {
    pub edge: EdgeRef,
    /// Visiting vertices this edge could close a loop onto, in stack order:
    /// not the source, not already joined to it by a closed edge, and with
    /// at least one open edge left.
    pub candidates: Vec<VertexId>,
    pub resolution: Resolution,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraversalStep {
    Vertex(VertexEvent),
    Edge(EdgeEvent),
}

/// What is known mid-traversal.
#[derive(Debug, Clone)]
pub struct TraversalState {
    status: Vec<Status>,
    visiting: Vec<VertexId>,
    visited: Vec<VertexId>,
    closed: Vec<bool>,
    open: Vec<usize>,
}

impl TraversalState {
    fn new<V: Label, E: Label>(g: &Graph<V, E>) -> Self {
        TraversalState {
            status: vec![Status::Unvisited; g.vertex_count()],
            visiting: Vec::new(),
            visited: Vec::new(),
            closed: vec![false; g.edge_count()],
            open: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
        }
    }

    /// Everything known: all vertices visited, all edges closed.
    pub fn complete<V: Label, E: Label>(g: &Graph<V, E>) -> Self {
        TraversalState {
            status: vec![Status::Visited; g.vertex_count()],
            visiting: Vec::new(),
            visited: (0..g.vertex_count()).collect(),
            closed: vec![true; g.edge_count()],
            open: vec![0; g.vertex_count()],
        }
    }

    pub fn status(&self, v: VertexId) -> Status {
        self.status[v]
    }

    pub fn is_known(&self, v: VertexId) -> bool {
        self.status[v] != Status::Unvisited
    }

    /// The visiting stack, bottom first.
    pub fn visiting(&self) -> &[VertexId] {
        &self.visiting
    }

    /// Visited vertices in the order they were popped.
    pub fn visited(&self) -> &[VertexId] {
        &self.visited
    }

    pub fn is_closed(&self, e: EdgeId) -> bool {
        self.closed[e]
    }

    /// Number of untraversed edges at `v`.
    pub fn open_edges(&self, v: VertexId) -> usize {
        self.open[v]
    }
}

/// Traverses the component of `root`, calling `visit` once per vertex and
/// once per edge and collecting the results in event order.
pub fn traverse<V, E, R>(
    g: &Graph<V, E>,
    root: VertexId,
    mut visit: impl FnMut(&TraversalStep, &TraversalState) -> R,
) -> Result<Vec<R>, GraphError>
where
    V: Label,
    E: Label,
{
    if g.is_directed() {
        return Err(GraphError::Directed);
    }
    if root >= g.vertex_count() {
        return Err(GraphError::RootOutOfRange {
            root,
            count: g.vertex_count(),
        });
    }

    let mut state = TraversalState::new(g);
    let mut out = Vec::new();

    let step = TraversalStep::Vertex(VertexEvent {
        vertex: root,
        degree: g.degree(root),
        incoming: None,
    });
    out.push(visit(&step, &state));
    state.status[root] = Status::Visiting;
    state.visiting.push(root);

    while let Some(&top) = state.visiting.last() {
        let next = g.incident(top).iter().copied().find(|&e| !state.closed[e]);
        let Some(e) = next else {
            state.visiting.pop();
            state.status[top] = Status::Visited;
            state.visited.push(top);
            continue;
        };
        let far = g.edge(e).other(top);
        let edge = EdgeRef {
            edge: e,
            from: top,
            to: far,
        };
        let candidates = loop_candidates(g, &state, top);
        let resolution = match state.status[far] {
            Status::Unvisited => Resolution::Fresh(far),
            Status::Visiting => Resolution::Close(far),
            Status::Visited => unreachable!("a visited vertex has no open edges"),
        };
        let step = TraversalStep::Edge(EdgeEvent {
            edge,
            candidates,
            resolution,
        });
        out.push(visit(&step, &state));

        state.closed[e] = true;
        state.open[top] -= 1;
        state.open[far] -= 1;

        if let Resolution::Fresh(v) = resolution {
            let step = TraversalStep::Vertex(VertexEvent {
                vertex: v,
                degree: g.degree(v),
                incoming: Some(edge.reversed()),
            });
            out.push(visit(&step, &state));
            state.status[v] = Status::Visiting;
            state.visiting.push(v);
        }
    }
    Ok(out)
}

/// The full event sequence for the component of `root`.
pub fn traversal_steps<V: Label, E: Label>(
    g: &Graph<V, E>,
    root: VertexId,
) -> Result<Vec<TraversalStep>, GraphError> {
    traverse(g, root, |step, _| step.clone())
}

fn loop_candidates<V: Label, E: Label>(
    g: &Graph<V, E>,
    state: &TraversalState,
    source: VertexId,
) -> Vec<VertexId> {
    state
        .visiting
        .iter()
        .copied()
        .filter(|&c| c != source && state.open[c] > 0)
        .filter(|&c| {
            !g.incident(source)
                .iter()
                .any(|&e| state.closed[e] && g.edge(e).other(source) == c)
        })
        .collect()
}
