use std::collections::BTreeMap;

use graphmml::samples::DRUGS;
use graphmml::smiles::{
    infer_implicit_bonds, parse_smiles, read_molecule, smiles_to_graph, Bond, Element,
    ValenceConfig,
};
use proptest::prelude::*;

fn oracle() -> BTreeMap<String, (BTreeMap<Element, usize>, usize)> {
    let text = include_str!("data/drug_atoms.tsv");
    let elements = [
        Element::Carbon,
        Element::Nitrogen,
        Element::Oxygen,
        Element::Sulphur,
        Element::Chlorine,
    ];
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|line| {
            let fields: Vec<&str> = line.split('\t').collect();
            let counts = elements
                .iter()
                .zip(&fields[1..6])
                .map(|(&e, n)| (e, n.parse().unwrap()))
                .filter(|&(_, n)| n > 0)
                .collect();
            (fields[0].to_string(), (counts, fields[6].parse().unwrap()))
        })
        .collect()
}

#[test]
fn drug_heavy_atoms_match_hand_counts() {
    let expected = oracle();
    assert_eq!(expected.len(), 4);
    for (name, smiles) in DRUGS {
        let (g, degrees) = read_molecule(smiles, &ValenceConfig::default()).unwrap();
        let (counts, total) = &expected[name];
        assert_eq!(g.vertex_count(), *total, "{name}");
        let mut seen = BTreeMap::new();
        for &e in g.labels() {
            *seen.entry(e).or_insert(0) += 1;
        }
        assert_eq!(&seen, counts, "{name}");
        assert_eq!(degrees.len(), counts.len());
        // Molecules are connected and every aromatic bond joins aromatic atoms.
        let ast = infer_implicit_bonds(parse_smiles(smiles).unwrap());
        let atoms = ast.atoms();
        for e in g.edges() {
            if e.label == Bond::Aromatic {
                assert!(atoms[e.u].aromatic && atoms[e.v].aromatic);
            }
        }
        let components = graphmml::graph::connected_components(&g);
        assert_eq!(components.len(), 1);
    }
}

#[test]
fn drug_ring_and_bond_counts() {
    // Edges = atoms - 1 + ring closures for a connected molecule.
    let rings = [("viagra", 4), ("cialis", 6), ("valium", 3), ("xanax", 4)];
    for ((name, smiles), (rname, closures)) in DRUGS.iter().zip(rings) {
        assert_eq!(*name, rname);
        let ast = parse_smiles(smiles).unwrap();
        assert_eq!(ast.rings.len(), closures, "{name}");
        let g = smiles_to_graph(&infer_implicit_bonds(ast)).unwrap();
        assert_eq!(g.edge_count(), g.vertex_count() - 1 + closures, "{name}");
    }
}

#[test]
fn benzene_is_an_aromatic_six_cycle() {
    let (g, _) = read_molecule("c1ccccc1", &ValenceConfig::default()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
    assert!(g.labels().iter().all(|&e| e == Element::Carbon));
    assert!(g.edges().iter().all(|e| e.label == Bond::Aromatic));
    // Walk the cycle.
    let mut prev = 0;
    let mut here = g.edge(g.incident(0)[0]).other(0);
    let mut steps = 1;
    while here != 0 {
        assert_eq!(g.degree(here), 2);
        let next = g
            .incident(here)
            .iter()
            .map(|&e| g.edge(e).other(here))
            .find(|&w| w != prev)
            .unwrap();
        prev = here;
        here = next;
        steps += 1;
    }
    assert_eq!(steps, 6);
}

fn organic() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec![
        "C", "N", "O", "S", "P", "Cl", "Br", "I", "[NH4+]", "[C@H]",
    ])
}

fn bond() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["", "", "-", "="])
}

proptest! {
    #[test]
    fn linear_chains_parse_into_paths(atoms in proptest::collection::vec(organic(), 1..12), bonds in proptest::collection::vec(bond(), 12)) {
        let mut text = String::new();
        for (i, atom) in atoms.iter().enumerate() {
            if i > 0 {
                text.push_str(bonds[i]);
            }
            text.push_str(atom);
        }
        let ast = infer_implicit_bonds(parse_smiles(&text).unwrap());
        prop_assert_eq!(ast.atom_count, atoms.len());
        let g = smiles_to_graph(&ast).unwrap();
        prop_assert_eq!(g.vertex_count(), atoms.len());
        prop_assert_eq!(g.edge_count(), atoms.len() - 1);
        for (i, e) in g.edges().iter().enumerate() {
            prop_assert_eq!((e.u, e.v), (i, i + 1));
            let expected = if bonds[i + 1] == "=" { Bond::Double } else { Bond::Single };
            prop_assert_eq!(e.label, expected);
        }
    }

    #[test]
    fn parsing_never_panics(text in "[CNOcn()=#1-3%\\[\\]@H+]{0,16}") {
        let _ = parse_smiles(&text).map(|ast| smiles_to_graph(&infer_implicit_bonds(ast)));
    }
}
