//! Established centrality and ego-network metrics used for comparison.
//!
//! In weighted mode, weights act as tie strength: degree becomes strength,
//! shortest paths use arc length `1 / w`, and the eigenvector, constraint and
//! effective-size computations use the weighted adjacency.

mod ego;
mod eigenvector;
mod paths;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::centrality::{CentralityVector, MetricKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use ego::{burt_constraint, effective_size};
pub use eigenvector::{eigenvector_centrality, EIGEN_MAX_ITER, EIGEN_TOLERANCE};
pub use paths::{betweenness_centrality, closeness_centrality};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaselineId {
    Degree,
    Closeness,
    Betweenness,
    Eigenvector,
    Constraint,
    EffectiveSize,
}

impl BaselineId {
    pub const ALL: [BaselineId; 6] = [
        BaselineId::Degree,
        BaselineId::Closeness,
        BaselineId::Betweenness,
        BaselineId::Eigenvector,
        BaselineId::Constraint,
        BaselineId::EffectiveSize,
    ];

    fn short(self) -> &'static str {
        match self {
            BaselineId::Degree => "dg",
            BaselineId::Closeness => "clo",
            BaselineId::Betweenness => "btw",
            BaselineId::Eigenvector => "eig",
            BaselineId::Constraint => "con",
            BaselineId::EffectiveSize => "es",
        }
    }
}

/// A baseline metric in weighted or unweighted form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BaselineSpec {
    pub metric: BaselineId,
    pub weighted: bool,
}

impl BaselineSpec {
    pub const fn new(metric: BaselineId, weighted: bool) -> Self {
        BaselineSpec { metric, weighted }
    }

    /// All twelve baselines: each metric unweighted, then weighted.
    pub fn all() -> Vec<BaselineSpec> {
        BaselineId::ALL
            .iter()
            .flat_map(|&m| [BaselineSpec::new(m, false), BaselineSpec::new(m, true)])
            .collect()
    }
}

/// Short names: `dg`, `clo`, `btw`, `eig`, `con`, `es`, prefixed with `w`
/// for the weighted form.
impl fmt::Display for BaselineSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.weighted {
            f.write_str("w")?;
        }
        f.write_str(self.metric.short())
    }
}

impl FromStr for BaselineSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let alias = match lower.as_str() {
            "wdg" | "wdeg" => "wdg",
            "wclos" => "wclo",
            "wbetw" => "wbtw",
            "betw" => "btw",
            "clos" => "clo",
            "deg" => "dg",
            other => other,
        };
        for spec in BaselineSpec::all() {
            if spec.to_string() == alias {
                return Ok(spec);
            }
        }
        Err(Error::UnknownMetric(s.to_owned()))
    }
}

/// Degree (unweighted) or strength (weighted). Directed graphs count in- and
/// out-arcs together.
pub fn degree_centrality(graph: &Graph, weighted: bool) -> CentralityVector {
    let scores = (0..graph.node_count())
        .map(|i| {
            let mut arcs: Vec<f64> = graph.out_neighbors(i).map(|(_, w)| w).collect();
            if graph.is_directed() {
                arcs.extend(graph.in_neighbors(i).map(|(_, w)| w));
            }
            if weighted {
                arcs.iter().sum()
            } else {
                arcs.len() as f64
            }
        })
        .collect();
    vector(graph, BaselineId::Degree, weighted, scores)
}

pub fn compute_baseline(graph: &Graph, spec: BaselineSpec) -> Result<CentralityVector> {
    let w = spec.weighted;
    match spec.metric {
        BaselineId::Degree => Ok(degree_centrality(graph, w)),
        BaselineId::Closeness => closeness_centrality(graph, w),
        BaselineId::Betweenness => Ok(betweenness_centrality(graph, w)),
        BaselineId::Eigenvector => eigenvector_centrality(graph, w),
        BaselineId::Constraint => burt_constraint(graph, w),
        BaselineId::EffectiveSize => effective_size(graph, w),
    }
}

pub(crate) fn vector(
    graph: &Graph,
    metric: BaselineId,
    weighted: bool,
    scores: Vec<f64>,
) -> CentralityVector {
    CentralityVector::new(
        MetricKind::Baseline(BaselineSpec::new(metric, weighted)),
        Arc::clone(graph.labels()),
        scores,
        graph.isolates(),
    )
}

pub(crate) fn require_undirected(graph: &Graph, metric: &'static str) -> Result<()> {
    if graph.is_directed() {
        Err(Error::RequiresUndirected { metric })
    } else {
        Ok(())
    }
}
