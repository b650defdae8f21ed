use crate::graph::{Graph, VertexId};

use super::ast::{BondSlot, BranchedAtom, Chain, SmilesAst};
use super::{Bond, Element, Molecule, SmilesError};

fn implicit(a: bool, b: bool) -> Bond {
    if a && b {
        Bond::Aromatic
    } else {
        Bond::Single
    }
}

/// Rewrites every unwritten bond as aromatic between two aromatic atoms and
/// single otherwise.
pub fn infer_implicit_bonds(mut ast: SmilesAst) -> SmilesAst {
    let aromatic: Vec<bool> = ast.atoms().iter().map(|a| a.aromatic).collect();
    fill_chain(&mut ast.chain, &aromatic);
    for ring in &mut ast.rings {
        ring.bond
            .get_or_insert_with(|| implicit(aromatic[ring.open_atom], aromatic[ring.close_atom]));
    }
    ast
}

fn fill_chain(chain: &mut Chain, aromatic: &[bool]) {
    fill_atom(&mut chain.head, aromatic);
    let mut prev = chain.head.atom.index;
    for (bond, atom) in &mut chain.tail {
        bond.get_or_insert_with(|| implicit(aromatic[prev], aromatic[atom.atom.index]));
        fill_atom(atom, aromatic);
        prev = atom.atom.index;
    }
}

fn fill_atom(atom: &mut BranchedAtom, aromatic: &[bool]) {
    let here = atom.atom.index;
    for branch in &mut atom.branches {
        let head = branch.chain.head.atom.index;
        branch
            .bond
            .get_or_insert_with(|| implicit(aromatic[here], aromatic[head]));
        fill_chain(&mut branch.chain, aromatic);
    }
}

struct Walk<'a> {
    ast: &'a SmilesAst,
    aromatic: Vec<bool>,
    // atom index -> vertex id; `None` for hydrogens
    vertex: Vec<Option<VertexId>>,
    edges: Vec<(VertexId, VertexId, Bond)>,
    opened: Vec<bool>,
}

impl Walk<'_> {
    fn bond(&mut self, a: usize, b: usize, slot: BondSlot) {
        let bond = slot.unwrap_or_else(|| implicit(self.aromatic[a], self.aromatic[b]));
        if let (Some(u), Some(v)) = (self.vertex[a], self.vertex[b]) {
            self.edges.push((u, v, bond));
        }
    }

    fn chain(&mut self, chain: &Chain, incoming: Option<(usize, BondSlot)>) {
        self.atom(&chain.head, incoming);
        let mut prev = chain.head.atom.index;
        for (bond, atom) in &chain.tail {
            self.atom(atom, Some((prev, *bond)));
            prev = atom.atom.index;
        }
    }

    fn atom(&mut self, atom: &BranchedAtom, incoming: Option<(usize, BondSlot)>) {
        let here = atom.atom.index;
        if let Some((from, slot)) = incoming {
            self.bond(from, here, slot);
        }
        for mark in &atom.rings {
            // The first mark of a closure opens it; the second emits the bond.
            if std::mem::replace(&mut self.opened[mark.closure], true) {
                let ring = self.ast.rings[mark.closure];
                self.bond(ring.open_atom, here, ring.bond);
            }
        }
        for branch in &atom.branches {
            self.chain(&branch.chain, Some((here, branch.bond)));
        }
    }
}

/// Builds the heavy-atom graph. Vertices follow document order; edges
/// follow the walk: chain bond into each atom, then ring bonds closing at it,
/// then its branches.
pub fn smiles_to_graph(ast: &SmilesAst) -> Result<Molecule, SmilesError> {
    let atoms = ast.atoms();
    let mut labels = Vec::new();
    let vertex = atoms
        .iter()
        .map(|a| {
            (a.element != Element::Hydrogen).then(|| {
                labels.push(a.element);
                labels.len() - 1
            })
        })
        .collect();
    let mut walk = Walk {
        ast,
        aromatic: atoms.iter().map(|a| a.aromatic).collect(),
        vertex,
        edges: Vec::new(),
        opened: vec![false; ast.rings.len()],
    };
    walk.chain(&ast.chain, None);
    Ok(Graph::undirected(labels, walk.edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphError;
    use crate::smiles::parse_smiles;

    fn graph(s: &str) -> Molecule {
        smiles_to_graph(&infer_implicit_bonds(parse_smiles(s).unwrap())).unwrap()
    }

    fn edge_list(g: &Molecule) -> Vec<(usize, usize, Bond)> {
        g.edges().iter().map(|e| (e.u, e.v, e.label)).collect()
    }

    #[test]
    fn benzene_is_an_aromatic_hexagon() {
        let g = graph("c1ccccc1");
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!(g.edges().iter().all(|e| e.label == Bond::Aromatic));
        assert!((0..6).all(|v| g.degree(v) == 2));
        assert_eq!(
            g.find_edge(5, 0).map(|e| g.edge(e).label),
            Some(Bond::Aromatic)
        );
    }

    #[test]
    fn walk_order() {
        let g = graph("CC(=O)O");
        assert_eq!(
            edge_list(&g),
            vec![
                (0, 1, Bond::Single),
                (1, 2, Bond::Double),
                (1, 3, Bond::Single)
            ]
        );
        // Ring bond is emitted at its closing atom, before that atom's branches.
        let g = graph("C1CC1(N)O");
        assert_eq!(
            edge_list(&g),
            vec![
                (0, 1, Bond::Single),
                (1, 2, Bond::Single),
                (0, 2, Bond::Single),
                (2, 3, Bond::Single),
                (2, 4, Bond::Single),
            ]
        );
    }

    #[test]
    fn explicit_bonds_win() {
        let g = graph("c1ccccc1-c2ccccc2");
        assert_eq!(g.edge(6).label, Bond::Single);
        let g = graph("C=1CCCCC1");
        assert_eq!(
            g.find_edge(0, 5).map(|e| g.edge(e).label),
            Some(Bond::Double)
        );
        let g = graph("C#N");
        assert_eq!(g.edge(0).label, Bond::Triple);
        // Aromatic atoms next to an aliphatic one get a single bond.
        let g = graph("Cc1ccccc1");
        assert_eq!(g.edge(0).label, Bond::Single);
        assert_eq!(g.edge(1).label, Bond::Aromatic);
    }

    #[test]
    fn hydrogens_are_dropped() {
        let g = graph("[H]C([H])([H])O[H]");
        assert_eq!(g.labels(), &[Element::Carbon, Element::Oxygen]);
        assert_eq!(edge_list(&g), vec![(0, 1, Bond::Single)]);
        let g = graph("[CH4]");
        assert_eq!(g.vertex_count(), 1);
    }

    #[test]
    fn inference_leaves_no_gaps() {
        let ast = infer_implicit_bonds(parse_smiles("c1cc(C)ccc1C(N)=O").unwrap());
        assert!(ast.rings.iter().all(|r| r.bond.is_some()));
        let mut ok = true;
        ast.chain.for_each_atom(&mut |b| {
            ok &= b.branches.iter().all(|br| br.bond.is_some());
        });
        assert!(ok);
        assert!(ast.chain.tail.iter().all(|(b, _)| b.is_some()));
    }

    #[test]
    fn impossible_rings_are_graph_errors() {
        let ast = infer_implicit_bonds(parse_smiles("C11").unwrap());
        assert!(matches!(
            smiles_to_graph(&ast),
            Err(SmilesError::Graph(GraphError::SelfLoop { .. }))
        ));
        let ast = infer_implicit_bonds(parse_smiles("C1C1").unwrap());
        assert!(matches!(
            smiles_to_graph(&ast),
            Err(SmilesError::Graph(GraphError::DuplicateEdge { .. }))
        ));
    }
}
