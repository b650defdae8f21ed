//! A SMILES subset for small organic molecules.
//!
//! Heavy atoms become vertices labelled by [`Element`], bonds become edges
//! labelled by [`Bond`]. Hydrogens, whether implicit or written as `[H]`
//! atoms, do not appear in the graph. Charge, chirality and bracket
//! hydrogen counts are parsed and kept in the AST only.

mod ast;
mod build;
mod parser;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::context::{ContextModel, MaxDegreeMap};
use crate::graph::{Graph, GraphError, VertexId};

pub use ast::{
    Atom, BondSlot, BracketInfo, Branch, BranchedAtom, Chain, Chirality, RingClosure, RingMark,
    SmilesAst,
};
pub use build::{infer_implicit_bonds, smiles_to_graph};
pub use parser::parse_smiles;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Hydrogen,
    Carbon,
    Nitrogen,
    Oxygen,
    Phosphorous,
    Sulphur,
    Bromine,
    Chlorine,
    Iodine,
}

impl Element {
    pub const ALL: [Element; 9] = [
        Element::Hydrogen,
        Element::Carbon,
        Element::Nitrogen,
        Element::Oxygen,
        Element::Phosphorous,
        Element::Sulphur,
        Element::Bromine,
        Element::Chlorine,
        Element::Iodine,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Element::Hydrogen => "H",
            Element::Carbon => "C",
            Element::Nitrogen => "N",
            Element::Oxygen => "O",
            Element::Phosphorous => "P",
            Element::Sulphur => "S",
            Element::Bromine => "Br",
            Element::Chlorine => "Cl",
            Element::Iodine => "I",
        }
    }

    pub fn from_symbol(symbol: &str) -> Option<Element> {
        Element::ALL.into_iter().find(|e| e.symbol() == symbol)
    }

    /// Elements that may be written in lowercase aromatic form.
    pub fn can_be_aromatic(self) -> bool {
        matches!(
            self,
            Element::Carbon | Element::Nitrogen | Element::Oxygen | Element::Sulphur
        )
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bond {
    NoBond,
    Single,
    Double,
    Triple,
    Aromatic,
}

impl Bond {
    /// The labels that can appear on a molecule graph edge.
    pub const EDGE_LABELS: [Bond; 4] = [Bond::Single, Bond::Double, Bond::Triple, Bond::Aromatic];

    pub fn symbol(self) -> char {
        match self {
            Bond::NoBond => '.',
            Bond::Single => '-',
            Bond::Double => '=',
            Bond::Triple => '#',
            Bond::Aromatic => ':',
        }
    }

    pub fn from_symbol(c: char) -> Option<Bond> {
        match c {
            '-' => Some(Bond::Single),
            '=' => Some(Bond::Double),
            '#' => Some(Bond::Triple),
            ':' => Some(Bond::Aromatic),
            _ => None,
        }
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmilesError {
    #[error("empty SMILES string")]
    Empty,
    #[error("unbalanced parenthesis at position {position}")]
    UnbalancedParenthesis { position: usize },
    #[error("ring bond {digit} is opened but never closed")]
    UnmatchedRing { digit: u16 },
    #[error("ring bond {digit} has conflicting bond symbols")]
    RingBondConflict { digit: u16 },
    #[error("unknown element {symbol:?} at position {position}")]
    UnknownElement { symbol: String, position: usize },
    #[error("malformed bracket atom at position {position}: {reason}")]
    MalformedBracket {
        position: usize,
        reason: &'static str,
    },
    #[error("{what} at position {position} is not supported")]
    Unsupported { what: &'static str, position: usize },
    #[error("unexpected character {found:?} at position {position}")]
    UnexpectedCharacter { found: char, position: usize },
    #[error("bond symbol at position {position} is not followed by an atom")]
    DanglingBond { position: usize },
    #[error("atom {atom} ({element}) has degree {degree}, above its maximum {max}")]
    ValenceExceeded {
        atom: VertexId,
        element: Element,
        degree: usize,
        max: usize,
    },
    #[error("invalid molecule graph: {0}")]
    Graph(#[from] GraphError),
}

/// Maximum degree per element; defaults are conventional valences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValenceConfig(BTreeMap<Element, usize>);

impl Default for ValenceConfig {
    fn default() -> Self {
        use Element::*;
        ValenceConfig(
            [
                (Hydrogen, 1),
                (Carbon, 4),
                (Nitrogen, 4),
                (Oxygen, 2),
                (Phosphorous, 5),
                (Sulphur, 6),
                (Bromine, 1),
                (Chlorine, 1),
                (Iodine, 1),
            ]
            .into_iter()
            .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid valence setting {0:?}; expected Element=limit with limit >= 1")]
pub struct ValenceParseError(pub String);

impl ValenceConfig {
    pub fn get(&self, element: Element) -> usize {
        self.0[&element]
    }

    pub fn set(&mut self, element: Element, max: usize) {
        assert!(max > 0, "valence must be positive");
        self.0.insert(element, max);
    }

    /// Applies one `Element=limit` setting, e.g. `C=4` or `Cl=1`.
    pub fn apply(&mut self, setting: &str) -> Result<(), ValenceParseError> {
        let (symbol, limit) =
            parse_setting(setting).ok_or_else(|| ValenceParseError(setting.to_string()))?;
        let element =
            Element::from_symbol(symbol).ok_or_else(|| ValenceParseError(setting.to_string()))?;
        self.set(element, limit);
        Ok(())
    }

    /// The whole configuration as a degree map over all nine elements.
    pub fn degree_map(&self) -> MaxDegreeMap<Element> {
        self.0.iter().map(|(&e, &d)| (e, d)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Element, usize)> + '_ {
        self.0.iter().map(|(&e, &d)| (e, d))
    }
}

/// Splits `Name=limit`, rejecting zero and non-numeric limits.
pub fn parse_setting(setting: &str) -> Option<(&str, usize)> {
    let (name, limit) = setting.trim().split_once('=')?;
    let limit: usize = limit.trim().parse().ok()?;
    let name = name.trim();
    (limit > 0 && !name.is_empty()).then_some((name, limit))
}

impl FromStr for ValenceConfig {
    type Err = ValenceParseError;

    /// One `Element=limit` per line over the defaults; blank lines and `#`
    /// comments are skipped.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut config = ValenceConfig::default();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            config.apply(line)?;
        }
        Ok(config)
    }
}

pub type Molecule = Graph<Element, Bond>;

/// Parses, infers implicit bonds and builds the graph, then checks every
/// degree against `valences`. The returned map covers the elements present.
pub fn read_molecule(
    text: &str,
    valences: &ValenceConfig,
) -> Result<(Molecule, MaxDegreeMap<Element>), SmilesError> {
    let ast = infer_implicit_bonds(parse_smiles(text)?);
    let graph = smiles_to_graph(&ast)?;
    for v in 0..graph.vertex_count() {
        let element = *graph.label(v);
        let max = valences.get(element);
        if graph.degree(v) > max {
            return Err(SmilesError::ValenceExceeded {
                atom: v,
                element,
                degree: graph.degree(v),
                max,
            });
        }
    }
    let present: MaxDegreeMap<Element> = valences
        .iter()
        .filter(|(e, _)| graph.labels().contains(e))
        .collect();
    Ok((graph, present))
}

/// A context model over every configured element and all bond labels.
pub fn molecule_model(valences: &ValenceConfig) -> ContextModel<Element, Bond> {
    ContextModel::new(valences.degree_map(), Bond::EDGE_LABELS)
}
