//! Small fixed graphs and molecules used in examples and tests.

use std::fmt;

use crate::context::MaxDegreeMap;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entity {
    Utility,
    House,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Connection {
    Elec,
    Gas,
    H2O,
}

impl fmt::Display for Entity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for Connection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub const CONNECTIONS: [Connection; 3] = [Connection::Elec, Connection::Gas, Connection::H2O];

fn utilities(houses: usize, edges: &[(usize, usize)]) -> Graph<Entity, Connection> {
    let mut labels = vec![Entity::Utility; 3];
    labels.extend(std::iter::repeat_n(Entity::House, houses));
    Graph::undirected(labels, edges.iter().map(|&(u, h)| (u, h, CONNECTIONS[u])))
        .expect("fixed sample graph is valid")
}

/// Three utilities each supplying three houses: ids 0-2 are utilities, 3-5
/// houses, and utility `i` connects with `CONNECTIONS[i]`.
pub fn k33() -> Graph<Entity, Connection> {
    utilities(
        3,
        &[
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
        ],
    )
}

/// A perturbed `k33`: gas skips house 4, and a fourth house 6 gets gas and
/// water.
pub fn near_k33() -> Graph<Entity, Connection> {
    utilities(
        4,
        &[
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 3),
            (1, 5),
            (1, 6),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
        ],
    )
}

/// Degree bound covering both utility graphs.
pub fn utility_degrees() -> MaxDegreeMap<Entity> {
    [(Entity::Utility, 4), (Entity::House, 4)]
        .into_iter()
        .collect()
}

pub const VIAGRA: &str = "CCc1nn(C)c2c(=O)[nH]c(nc12)c3cc(ccc3OCC)S(=O)(=O)N4CCN(C)CC4";
pub const CIALIS: &str = "CN1CC(=O)N2[C@@H](c3[nH]c4ccccc4c3C[C@@H]2C1=O)c5ccc6OCOc6c5";
pub const VALIUM: &str = "CN1C(=O)CN=C(c2ccccc2)c3cc(Cl)ccc13";
pub const XANAX: &str = "Cc1nnc2CN=C(c3ccccc3)c4cc(Cl)ccc4-n12";

pub const DRUGS: [(&str, &str); 4] = [
    ("viagra", VIAGRA),
    ("cialis", CIALIS),
    ("valium", VALIUM),
    ("xanax", XANAX),
];
