use std::fmt::{self, Display};

use rayon::prelude::*;

use crate::bits::Bits;
use crate::graph::{Graph, Label};
use crate::traverse::{traverse, Resolution, TraversalStep};

use super::matching::{edge_matches, vertex_matches};
use super::model::{scored_matches_to_model, EdgeOutcome, EdgeTarget, VertexOutcome};
use super::{ContextError, ContextModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Vertex,
    Edge,
}

impl Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::Vertex => "V",
            StepKind::Edge => "E",
        })
    }
}

/// One prediction made during a traversal.
#[derive(Debug, Clone, PartialEq)]
pub struct StepRecord {
    pub kind: StepKind,
    /// Vertex id or edge id, depending on `kind`.
    pub element: usize,
    /// The actual outcome, e.g. `C:3` or `=:close(4)`.
    pub outcome: String,
    pub bits: Bits,
    pub outcome_count: usize,
    pub matches: usize,
    /// Total probability of the distribution used for this step.
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InfoResult {
    pub total: Bits,
    pub steps: Vec<StepRecord>,
    pub backgrounds: String,
}

impl InfoResult {
    /// Tab-separated step log: index, kind, outcome, bits.
    pub fn step_log(&self) -> String {
        let mut out = String::from("step\tkind\toutcome\tbits\n");
        for (i, s) in self.steps.iter().enumerate() {
            out.push_str(&format!("{i}\t{}\t{}\t{:.6}\n", s.kind, s.outcome, s.bits));
        }
        out
    }
}

fn describe<V: Label, E: Label>(backgrounds: &[Graph<V, E>]) -> String {
    if backgrounds.is_empty() {
        return "none".to_string();
    }
    let vertices: usize = backgrounds.iter().map(Graph::vertex_count).sum();
    let edges: usize = backgrounds.iter().map(Graph::edge_count).sum();
    format!(
        "{} graphs, {vertices} vertices, {edges} edges",
        backgrounds.len()
    )
}

/// Bits to transmit the connected undirected graph `g` when `backgrounds`
/// are known to both sides. An empty background list gives the
/// unconditional estimate.
pub fn information_content<V, E>(
    g: &Graph<V, E>,
    backgrounds: &[Graph<V, E>],
    model: &ContextModel<V, E>,
) -> Result<InfoResult, ContextError>
where
    V: Label + Display,
    E: Label + Display,
{
    model.params.validate()?;
    if g.is_directed() {
        return Err(crate::graph::GraphError::Directed.into());
    }
    for v in 0..g.vertex_count() {
        let label = g.label(v);
        let max = model
            .degrees
            .get(label)
            .ok_or_else(|| ContextError::MissingDegree {
                vertex: v,
                label: label.to_string(),
            })?;
        if g.degree(v) > max {
            return Err(ContextError::DegreeExceeded {
                vertex: v,
                label: label.to_string(),
                degree: g.degree(v),
                max,
            });
        }
    }
    for (i, edge) in g.edges().iter().enumerate() {
        if model.edge_labels.binary_search(&edge.label).is_err() {
            return Err(ContextError::UnknownEdgeLabel {
                edge: i,
                label: edge.label.to_string(),
            });
        }
    }
    let description = describe(backgrounds);
    if g.vertex_count() == 0 {
        return Ok(InfoResult {
            total: Bits::ZERO,
            steps: Vec::new(),
            backgrounds: description,
        });
    }

    let vertex_space = |lowest: usize| -> Vec<VertexOutcome<V>> {
        model
            .degrees
            .iter()
            .flat_map(|(label, max)| {
                (lowest..=max).map(move |degree| VertexOutcome {
                    label: label.clone(),
                    degree,
                })
            })
            .collect()
    };
    if traverse(g, 0, |_, _| ())?.len() != g.vertex_count() + g.edge_count() {
        return Err(ContextError::NotConnected);
    }
    // The root may be isolated; every later vertex has its arrival edge.
    let root_space = vertex_space(0);
    let inner_space = vertex_space(1);
    let depth = model.params.depth;

    let steps = traverse(g, 0, |step, state| match step {
        TraversalStep::Vertex(event) => {
            let matches = vertex_matches(g, state, event, backgrounds, depth);
            let votes = matches.iter().map(|m| {
                let bg = &backgrounds[m.graph];
                let outcome = VertexOutcome {
                    label: bg.label(m.vertex).clone(),
                    degree: bg.degree(m.vertex),
                };
                (outcome, m.score)
            });
            let space = if event.incoming.is_none() {
                root_space.clone()
            } else {
                inner_space.clone()
            };
            let prediction = scored_matches_to_model(space, votes, &model.params)?;
            let actual = VertexOutcome {
                label: g.label(event.vertex).clone(),
                degree: event.degree,
            };
            let bits = prediction
                .nlpr(&actual)
                .expect("validated against the degree map");
            Ok(StepRecord {
                kind: StepKind::Vertex,
                element: event.vertex,
                outcome: actual.to_string(),
                bits,
                outcome_count: prediction.len(),
                matches: matches.len(),
                mass: prediction.mass(),
            })
        }
        TraversalStep::Edge(event) => {
            let matches = edge_matches(g, state, event, backgrounds, depth);
            let votes = matches.iter().map(|m| {
                let slot = m.slot.expect("edge matches carry a slot");
                let outcome = EdgeOutcome {
                    label: backgrounds[m.graph].edge(slot.edge).label.clone(),
                    target: m.closes_onto.map_or(EdgeTarget::Fresh, EdgeTarget::Close),
                };
                (outcome, m.score)
            });
            let targets: Vec<EdgeTarget> = std::iter::once(EdgeTarget::Fresh)
                .chain(event.candidates.iter().map(|&c| EdgeTarget::Close(c)))
                .collect();
            let space: Vec<EdgeOutcome<E>> = model
                .edge_labels
                .iter()
                .flat_map(|label| {
                    targets.iter().map(move |&target| EdgeOutcome {
                        label: label.clone(),
                        target,
                    })
                })
                .collect();
            let prediction = scored_matches_to_model(space, votes, &model.params)?;
            let actual = EdgeOutcome {
                label: g.edge(event.edge.edge).label.clone(),
                target: match event.resolution {
                    Resolution::Fresh(_) => EdgeTarget::Fresh,
                    Resolution::Close(t) => EdgeTarget::Close(t),
                },
            };
            let bits = prediction
                .nlpr(&actual)
                .expect("the actual target is always a candidate");
            Ok(StepRecord {
                kind: StepKind::Edge,
                element: event.edge.edge,
                outcome: actual.to_string(),
                bits,
                outcome_count: prediction.len(),
                matches: matches.len(),
                mass: prediction.mass(),
            })
        }
    })?
    .into_iter()
    .collect::<Result<Vec<StepRecord>, ContextError>>()?;

    Ok(InfoResult {
        total: steps.iter().map(|s| s.bits).sum(),
        steps,
        backgrounds: description,
    })
}

/// `cells[i][j]` = bits for graph `i` given graph `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionalTable {
    pub names: Vec<String>,
    pub cells: Vec<Vec<Bits>>,
}

pub fn conditional_table<V, E>(
    graphs: &[(String, Graph<V, E>)],
    model: &ContextModel<V, E>,
) -> Result<ConditionalTable, ContextError>
where
    V: Label + Display,
    E: Label + Display,
{
    let n = graphs.len();
    let flat = (0..n * n)
        .into_par_iter()
        .map(|cell| {
            let (i, j) = (cell / n, cell % n);
            information_content(&graphs[i].1, std::slice::from_ref(&graphs[j].1), model)
                .map(|r| r.total)
        })
        .collect::<Result<Vec<Bits>, ContextError>>()?;
    Ok(ConditionalTable {
        names: graphs.iter().map(|(name, _)| name.clone()).collect(),
        cells: flat.chunks(n.max(1)).map(<[Bits]>::to_vec).collect(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainReport {
    /// Bits for each graph given all graphs before it.
    pub items: Vec<(String, Bits)>,
    pub total: Bits,
}

/// Incremental conditioning: item `i` is graph `i` given graphs `0..i`.
pub fn chain_information<V, E>(
    graphs: &[(String, Graph<V, E>)],
    model: &ContextModel<V, E>,
) -> Result<ChainReport, ContextError>
where
    V: Label + Display,
    E: Label + Display,
{
    let backgrounds: Vec<Graph<V, E>> = graphs.iter().map(|(_, g)| g.clone()).collect();
    let items = (0..graphs.len())
        .into_par_iter()
        .map(|i| {
            information_content(&graphs[i].1, &backgrounds[..i], model)
                .map(|r| (graphs[i].0.clone(), r.total))
        })
        .collect::<Result<Vec<_>, ContextError>>()?;
    Ok(ChainReport {
        total: items.iter().map(|(_, b)| *b).sum(),
        items,
    })
}
