//! The five distinctiveness centrality metrics.
//!
//! Every metric sums over the arcs incident to a node and discounts each arc
//! by how well connected the node at the other end already is:
//!
//! | id | contribution of neighbour `j` to node `i` |
//! |----|--------------------------------------------|
//! | D1 | `w_ij · log10((n-1) / g_j^α)` |
//! | D2 | `log10((n-1) / g_j^α)` |
//! | D3 | `w_ij · log10(T / (S_j^α - w_ij^α + 1))` |
//! | D4 | `w_ij^(α+1) / S_j^α` |
//! | D5 | `1 / g_j^α` |
//!
//! with `g_j` the degree of `j`, `S_j^α = Σ_k w_jk^α` its α-strength and `T`
//! the total edge weight. On directed graphs the *in* variant sums over
//! incoming arcs and measures each sender by its out-degree/out-strength; the
//! *out* variant sums over outgoing arcs and measures each receiver by its
//! in-degree/in-strength. All logarithms are base 10.

mod bounds;
mod kernels;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use bounds::{bounds, negative_contribution_threshold, normalize, BoundsRecord};
pub use kernels::{compute, d1, d2, d3, d4, d5, Distinctiveness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetricId {
    D1,
    D2,
    D3,
    D4,
    D5,
}

impl MetricId {
    pub const ALL: [MetricId; 5] = [
        MetricId::D1,
        MetricId::D2,
        MetricId::D3,
        MetricId::D4,
        MetricId::D5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MetricId::D1 => "d1",
            MetricId::D2 => "d2",
            MetricId::D3 => "d3",
            MetricId::D4 => "d4",
            MetricId::D5 => "d5",
        }
    }
}

impl fmt::Display for MetricId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MetricId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "d1" => Ok(MetricId::D1),
            "d2" => Ok(MetricId::D2),
            "d3" => Ok(MetricId::D3),
            "d4" => Ok(MetricId::D4),
            "d5" => Ok(MetricId::D5),
            _ => Err(Error::UnknownMetric(s.to_owned())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Undirected,
    /// Incoming arcs, senders penalised by out-degree.
    In,
    /// Outgoing arcs, receivers penalised by in-degree.
    Out,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Undirected => "undirected",
            Direction::In => "in",
            Direction::Out => "out",
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "undirected" => Ok(Direction::Undirected),
            "in" => Ok(Direction::In),
            "out" => Ok(Direction::Out),
            _ => Err(Error::UnknownMetric(format!("direction {s}"))),
        }
    }
}

/// A metric, its penalisation exponent and the direction it is evaluated in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricSpec {
    pub metric: MetricId,
    pub alpha: f64,
    pub direction: Direction,
}

impl MetricSpec {
    /// Requires `alpha >= 1`.
    pub fn new(metric: MetricId, alpha: f64, direction: Direction) -> Result<Self> {
        check_alpha(alpha, false)?;
        Ok(MetricSpec {
            metric,
            alpha,
            direction,
        })
    }

    /// Also admits `0 < alpha < 1`, which the metric definitions do not cover.
    pub fn relaxed(metric: MetricId, alpha: f64, direction: Direction) -> Result<Self> {
        check_alpha(alpha, true)?;
        Ok(MetricSpec {
            metric,
            alpha,
            direction,
        })
    }
}

impl fmt::Display for MetricSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            Direction::Undirected => write!(f, "{}@{}", self.metric, self.alpha),
            d => write!(f, "{}_{}@{}", self.metric, d.as_str(), self.alpha),
        }
    }
}

pub(crate) fn check_alpha(alpha: f64, relaxed: bool) -> Result<()> {
    let ok = if relaxed {
        alpha.is_finite() && alpha > 0.0
    } else {
        alpha.is_finite() && alpha >= 1.0
    };
    if ok {
        Ok(())
    } else {
        Err(Error::AlphaOutOfDomain {
            alpha,
            domain: if relaxed { "alpha > 0" } else { "alpha >= 1" },
        })
    }
}
