//! Embedded evaluation networks and the random-graph generator.

mod generators;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::parse_edge_list;

pub use generators::{barabasi_albert, GeneratorParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dataset {
    /// Six-node weighted undirected toy network.
    ToyUndirected,
    /// Six-node weighted directed toy network.
    ToyDirected,
    /// Padgett's Florentine families marriage network (15 nodes, 20 edges).
    Florentine,
    /// Zachary's karate club with interaction-context weights (34 nodes, 78 edges).
    Zachary,
}

impl Dataset {
    pub const ALL: [Dataset; 4] = [
        Dataset::ToyUndirected,
        Dataset::ToyDirected,
        Dataset::Florentine,
        Dataset::Zachary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Dataset::ToyUndirected => "toy-undirected",
            Dataset::ToyDirected => "toy-directed",
            Dataset::Florentine => "florentine",
            Dataset::Zachary => "zachary",
        }
    }

    /// The dataset as edge-list text, exactly as shipped in `data/`.
    pub fn edge_list(self) -> &'static str {
        match self {
            Dataset::ToyUndirected => include_str!("../../data/toy-undirected.tsv"),
            Dataset::ToyDirected => include_str!("../../data/toy-directed.tsv"),
            Dataset::Florentine => include_str!("../../data/florentine.tsv"),
            Dataset::Zachary => include_str!("../../data/zachary.tsv"),
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Dataset::ToyUndirected => "6 nodes, 6 weighted edges",
            Dataset::ToyDirected => "6 nodes, 8 weighted arcs",
            Dataset::Florentine => "15 families, 20 marriage ties, unweighted",
            Dataset::Zachary => "34 members, 78 weighted ties",
        }
    }
}

impl fmt::Display for Dataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Dataset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Dataset::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| Error::UnknownDataset(s.to_owned()))
    }
}

pub fn builtin_dataset(dataset: Dataset) -> Graph {
    parse_edge_list(dataset.edge_list())
        .expect("embedded dataset parses")
        .0
}

pub fn builtin_dataset_by_name(name: &str) -> Result<Graph> {
    Ok(builtin_dataset(name.parse()?))
}
