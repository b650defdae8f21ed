//! Scoring how much of the known context around a target element also
//! appears around a background element.
//!
//! Only the known part of the target takes part: vertices that have been
//! reached and edges that have been traversed. An open edge is known to
//! exist but nothing more, so it matches anything and scores nothing.
//!
//! Depth is a radius in edge hops from the element being predicted: only
//! crossing an edge uses it up, and a vertex reached with none left is
//! paired but not explored.
//!
//! Scores count matched vertices plus matched edges. A correspondence
//! between target and background vertices is threaded through the whole
//! match; each vertex pairs with at most one partner and each edge is
//! counted at most once, so a score never exceeds the size of the
//! depth-radius ball around the anchor.

use crate::graph::{EdgeId, Graph, Label, VertexId};
use crate::traverse::{EdgeEvent, EdgeRef, TraversalState, VertexEvent};

/// Partial one-to-one map between target and background vertices, plus the
/// edge pairs already counted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Correspondence {
    vertices: Vec<(VertexId, VertexId)>,
    edges: Vec<(EdgeId, EdgeId)>,
}

#[derive(Debug, Clone, Copy)]
struct Mark(usize, usize);

impl Correspondence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_pair(target: VertexId, background: VertexId) -> Self {
        Correspondence {
            vertices: vec![(target, background)],
            edges: Vec::new(),
        }
    }

    pub fn background_of(&self, target: VertexId) -> Option<VertexId> {
        self.vertices.iter().find(|p| p.0 == target).map(|p| p.1)
    }

    pub fn target_of(&self, background: VertexId) -> Option<VertexId> {
        self.vertices
            .iter()
            .find(|p| p.1 == background)
            .map(|p| p.0)
    }

    pub fn pairs(&self) -> &[(VertexId, VertexId)] {
        &self.vertices
    }

    pub fn matched_edges(&self) -> &[(EdgeId, EdgeId)] {
        &self.edges
    }

    fn edge_used(&self, target: EdgeId, background: EdgeId) -> bool {
        self.edges
            .iter()
            .any(|p| p.0 == target || p.1 == background)
    }

    fn mark(&self) -> Mark {
        Mark(self.vertices.len(), self.edges.len())
    }

    fn rewind(&mut self, mark: Mark) {
        self.vertices.truncate(mark.0);
        self.edges.truncate(mark.1);
    }
}

/// A background element voting for an outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoredMatch {
    /// Index of the background graph.
    pub graph: usize,
    /// Background vertex whose label and degree are the vertex prediction,
    /// or the source of `slot` for an edge prediction.
    pub vertex: VertexId,
    /// Background edge oriented away from `vertex`; `None` only for the
    /// empty context of the first vertex.
    pub slot: Option<EdgeRef>,
    pub score: u32,
    /// For edge predictions: the loop candidate that corresponds to the far
    /// end of `slot`, if the match reached it.
    pub closes_onto: Option<VertexId>,
}

/// Matches the known part of a partly traversed target against one fully
/// known background graph.
#[derive(Clone, Copy)]
pub struct ContextMatcher<'a, V, E> {
    target: &'a Graph<V, E>,
    state: &'a TraversalState,
    background: &'a Graph<V, E>,
}

impl<'a, V: Label, E: Label> ContextMatcher<'a, V, E> {
    pub fn new(
        target: &'a Graph<V, E>,
        state: &'a TraversalState,
        background: &'a Graph<V, E>,
    ) -> Self {
        ContextMatcher {
            target,
            state,
            background,
        }
    }

    /// How much of the graph around target vertex `v1` matches the graph
    /// around background vertex `v2`. `arrival` is the edge pair the match
    /// came in by; it is excluded from the edge assignment. `None` means the
    /// labels differ. On return `corr` holds the best extension found.
    pub fn match_vertex(
        &self,
        v1: VertexId,
        v2: VertexId,
        arrival: Option<(EdgeId, EdgeId)>,
        corr: &mut Correspondence,
        depth: usize,
    ) -> Option<u32> {
        if self.target.label(v1) != self.background.label(v2) {
            return None;
        }
        match (corr.background_of(v1), corr.target_of(v2)) {
            (None, None) => corr.vertices.push((v1, v2)),
            (Some(b), Some(t)) if b == v2 && t == v1 => {}
            _ => return Some(0),
        }
        if depth == 0 {
            return Some(1);
        }
        let (skip1, skip2) = match arrival {
            Some((a, b)) => (Some(a), Some(b)),
            None => (None, None),
        };
        let mine: Vec<EdgeRef> = self
            .target
            .incident(v1)
            .iter()
            .copied()
            .filter(|&e| Some(e) != skip1 && self.state.is_closed(e))
            .map(|e| orient(self.target, e, v1))
            .collect();
        let theirs: Vec<EdgeRef> = self
            .background
            .incident(v2)
            .iter()
            .copied()
            .filter(|&e| Some(e) != skip2)
            .map(|e| orient(self.background, e, v2))
            .collect();
        let mut taken = vec![false; theirs.len()];
        Some(1 + self.assign(&mine, &theirs, &mut taken, corr, depth))
    }

    /// Best total over injective partial assignments of `mine[..]` onto
    /// `theirs`, each child committed to `corr` before the next is tried.
    fn assign(
        &self,
        mine: &[EdgeRef],
        theirs: &[EdgeRef],
        taken: &mut [bool],
        corr: &mut Correspondence,
        depth: usize,
    ) -> u32 {
        let Some((&first, rest)) = mine.split_first() else {
            return 0;
        };
        let mark = corr.mark();
        // Leaving `first` unassigned comes first, so it wins ties.
        let mut best = self.assign(rest, theirs, taken, corr, depth);
        let mut best_corr = corr.clone();
        for j in 0..theirs.len() {
            if taken[j] {
                continue;
            }
            corr.rewind(mark);
            let Some(here) = self.match_edge(first, theirs[j], corr, depth) else {
                continue;
            };
            taken[j] = true;
            let total = here + self.assign(rest, theirs, taken, corr, depth);
            taken[j] = false;
            if total > best {
                best = total;
                best_corr = corr.clone();
            }
        }
        *corr = best_corr;
        best
    }

    /// Edges must share a label; beyond that their far vertices may match
    /// with one hop less to go. An open target edge is admissible against
    /// anything and scores 0.
    pub fn match_edge(
        &self,
        e1: EdgeRef,
        e2: EdgeRef,
        corr: &mut Correspondence,
        depth: usize,
    ) -> Option<u32> {
        if !self.state.is_closed(e1.edge) {
            return Some(0);
        }
        if self.target.edge(e1.edge).label != self.background.edge(e2.edge).label {
            return None;
        }
        if corr.edge_used(e1.edge, e2.edge) {
            return Some(0);
        }
        match (corr.background_of(e1.to), corr.target_of(e2.to)) {
            (Some(b), Some(t)) if b == e2.to && t == e1.to => {
                corr.edges.push((e1.edge, e2.edge));
                Some(1)
            }
            (None, None) => {
                corr.edges.push((e1.edge, e2.edge));
                if depth == 0 {
                    return Some(1);
                }
                let far =
                    self.match_vertex(e1.to, e2.to, Some((e1.edge, e2.edge)), corr, depth - 1);
                Some(1 + far.unwrap_or(0))
            }
            _ => Some(0),
        }
    }
}

fn orient<V: Label, E: Label>(g: &Graph<V, E>, e: EdgeId, from: VertexId) -> EdgeRef {
    EdgeRef {
        edge: e,
        from,
        to: g.edge(e).other(from),
    }
}

/// Background edge slots `(graph, slot)`, every edge in both orientations.
fn slots<'g, V: Label, E: Label>(
    backgrounds: &'g [Graph<V, E>],
) -> impl Iterator<Item = (usize, &'g Graph<V, E>, EdgeRef)> + 'g {
    backgrounds.iter().enumerate().flat_map(|(gi, bg)| {
        (0..bg.vertex_count()).flat_map(move |v| {
            bg.incident(v)
                .iter()
                .map(move |&e| (gi, bg, orient(bg, e, v)))
        })
    })
}

/// Candidates for the vertex about to be revealed.
///
/// With an arrival edge, each background edge slot is matched against the
/// reversed arrival edge and votes for its source vertex. The target
/// vertex itself is never looked at. Without one, every background vertex
/// is an admissible match with score 0.
pub fn vertex_matches<V: Label, E: Label>(
    target: &Graph<V, E>,
    state: &TraversalState,
    event: &VertexEvent,
    backgrounds: &[Graph<V, E>],
    depth: usize,
) -> Vec<ScoredMatch> {
    let Some(back) = event.incoming else {
        return backgrounds
            .iter()
            .enumerate()
            .flat_map(|(gi, bg)| {
                (0..bg.vertex_count()).map(move |v| ScoredMatch {
                    graph: gi,
                    vertex: v,
                    slot: None,
                    score: 0,
                    closes_onto: None,
                })
            })
            .collect();
    };
    let label = &target.edge(back.edge).label;
    slots(backgrounds)
        .filter(|(_, bg, slot)| &bg.edge(slot.edge).label == label)
        .map(|(gi, bg, slot)| {
            let score = if depth == 0 {
                0
            } else {
                let matcher = ContextMatcher::new(target, state, bg);
                let mut corr = Correspondence::with_pair(event.vertex, slot.from);
                matcher
                    .match_edge(back, slot, &mut corr, depth)
                    .expect("labels already agree")
            };
            ScoredMatch {
                graph: gi,
                vertex: slot.from,
                slot: Some(slot),
                score,
                closes_onto: None,
            }
        })
        .collect()
}

/// Candidates for the edge about to be traversed out of its (known) source
/// vertex. Each background edge slot whose source matches the source votes
/// for its own label, and for closing onto whichever loop candidate its far
/// end corresponds to.
pub fn edge_matches<V: Label, E: Label>(
    target: &Graph<V, E>,
    state: &TraversalState,
    event: &EdgeEvent,
    backgrounds: &[Graph<V, E>],
    depth: usize,
) -> Vec<ScoredMatch> {
    let source = event.edge.from;
    let label = target.label(source);
    slots(backgrounds)
        .filter(|(_, bg, slot)| bg.label(slot.from) == label)
        .map(|(gi, bg, slot)| {
            let (score, closes_onto) = if depth == 0 {
                (0, None)
            } else {
                let matcher = ContextMatcher::new(target, state, bg);
                let mut corr = Correspondence::new();
                let score = matcher
                    .match_vertex(
                        source,
                        slot.from,
                        Some((event.edge.edge, slot.edge)),
                        &mut corr,
                        depth,
                    )
                    .expect("labels already agree");
                let closes = corr
                    .target_of(slot.to)
                    .filter(|c| event.candidates.contains(c));
                (score, closes)
            };
            ScoredMatch {
                graph: gi,
                vertex: slot.from,
                slot: Some(slot),
                score,
                closes_onto,
            }
        })
        .collect()
}
