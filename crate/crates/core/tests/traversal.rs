use std::collections::{BTreeSet, HashSet};

use graphmml::graph::{connected_components, max_edges, Graph};
use graphmml::traverse::{traverse, Resolution, Status, TraversalStep};
use proptest::prelude::*;

/// Every simple graph on `n` unlabelled vertices, one per subset of pairs.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph<(), ()>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(u, v))| (u, v, ()));
        Graph::undirected(vec![(); n], edges).unwrap()
    })
}

fn reachable(g: &Graph<(), ()>, root: usize) -> HashSet<usize> {
    let mut seen = HashSet::from([root]);
    let mut todo = vec![root];
    while let Some(v) = todo.pop() {
        for &e in g.incident(v) {
            let w = g.edge(e).other(v);
            if seen.insert(w) {
                todo.push(w);
            }
        }
    }
    seen
}

#[test]
fn exhaustive_traversal_invariants() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            let component = reachable(&g, 0);
            let component_edges = g
                .edges()
                .iter()
                .filter(|e| component.contains(&e.u))
                .count();
            let mut vertices = Vec::new();
            let mut edges = Vec::new();
            let mut expect_next: Option<usize> = None;
            let steps = traverse(&g, 0, |step, state| {
                for &v in state.visited() {
                    assert_eq!(state.status(v), Status::Visited);
                    assert!(g.incident(v).iter().all(|&e| state.is_closed(e)));
                }
                for e in g.edges() {
                    if state.status(e.u) == Status::Visited && state.status(e.v) == Status::Visited
                    {
                        assert!(g.find_edge(e.u, e.v).is_some_and(|id| state.is_closed(id)));
                    }
                }
                match step {
                    TraversalStep::Vertex(ev) => {
                        if let Some(next) = expect_next.take() {
                            assert_eq!(ev.vertex, next);
                        }
                        assert_eq!(state.status(ev.vertex), Status::Unvisited);
                        assert_eq!(ev.degree, g.degree(ev.vertex));
                        assert_eq!(ev.incoming.is_none(), vertices.is_empty());
                        if let Some(back) = ev.incoming {
                            assert_eq!(back.from, ev.vertex);
                            assert_eq!(state.status(back.to), Status::Visiting);
                        }
                        vertices.push(ev.vertex);
                    }
                    TraversalStep::Edge(ev) => {
                        assert!(expect_next.is_none());
                        assert!(!state.is_closed(ev.edge.edge));
                        // The source is the top of the visiting stack.
                        assert_eq!(state.visiting().last(), Some(&ev.edge.from));
                        assert!(!ev.candidates.contains(&ev.edge.from));
                        match ev.resolution {
                            Resolution::Fresh(w) => {
                                assert_eq!(w, ev.edge.to);
                                assert_eq!(state.status(w), Status::Unvisited);
                                expect_next = Some(w);
                            }
                            Resolution::Close(w) => {
                                assert_eq!(w, ev.edge.to);
                                assert!(ev.candidates.contains(&w));
                            }
                        }
                        for &c in &ev.candidates {
                            assert_eq!(state.status(c), Status::Visiting);
                            assert!(state.open_edges(c) > 0);
                        }
                        edges.push(ev.edge.edge);
                    }
                }
            })
            .unwrap();
            assert_eq!(steps.len(), component.len() + component_edges);
            assert_eq!(
                vertices.iter().collect::<BTreeSet<_>>().len(),
                component.len()
            );
            assert_eq!(edges.iter().collect::<BTreeSet<_>>().len(), component_edges);
            let again = traverse(&g, 0, |step, _| step.clone()).unwrap();
            let first = traverse(&g, 0, |step, _| step.clone()).unwrap();
            assert_eq!(first, again);
        }
    }
}

#[test]
fn max_edges_matches_pair_enumeration() {
    for n in 0..=6 {
        let unordered_distinct = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|(u, v)| u < v)
            .count();
        let unordered_loops = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|(u, v)| u <= v)
            .count();
        let ordered_distinct = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|(u, v)| u != v)
            .count();
        let ordered_loops = n * n;
        assert_eq!(max_edges(n, false, false), unordered_distinct);
        assert_eq!(max_edges(n, false, true), unordered_loops);
        assert_eq!(max_edges(n, true, false), ordered_distinct);
        assert_eq!(max_edges(n, true, true), ordered_loops);
    }
}

fn arb_graph() -> impl Strategy<Value = Graph<u8, u8>> {
    (1usize..9).prop_flat_map(|n| {
        let labels = proptest::collection::vec(0u8..3, n);
        let edges = proptest::collection::btree_set((0..n, 0..n), 0..=n * 2);
        (labels, edges).prop_map(|(labels, raw)| {
            let pairs: BTreeSet<(usize, usize)> = raw
                .into_iter()
                .filter(|(u, v)| u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            let edges = pairs.into_iter().map(|(u, v)| (u, v, ((u + v) % 2) as u8));
            Graph::undirected(labels, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn components_partition_the_graph(g in arb_graph()) {
        let parts = connected_components(&g);
        let mut seen = vec![false; g.vertex_count()];
        let mut edge_total = 0;
        for part in &parts {
            edge_total += part.graph.edge_count();
            prop_assert_eq!(part.original.len(), part.graph.vertex_count());
            for (local, &orig) in part.original.iter().enumerate() {
                prop_assert!(!seen[orig]);
                seen[orig] = true;
                prop_assert_eq!(part.graph.label(local), g.label(orig));
            }
            for e in part.graph.edges() {
                let (u, v) = (part.original[e.u], part.original[e.v]);
                let id = g.find_edge(u, v);
                prop_assert!(id.is_some());
                prop_assert_eq!(&g.edge(id.unwrap()).label, &e.label);
            }
            let steps = traverse(&part.graph, 0, |_, _| ()).unwrap();
            prop_assert_eq!(steps.len(), part.graph.vertex_count() + part.graph.edge_count());
        }
        prop_assert!(seen.into_iter().all(|s| s));
        prop_assert_eq!(edge_total, g.edge_count());
        let smallest: Vec<usize> = parts.iter().map(|p| p.original[0]).collect();
        let mut sorted = smallest.clone();
        sorted.sort();
        prop_assert_eq!(smallest, sorted);
    }
}
