use std::sync::Arc;

use super::{check_alpha, Direction, MetricId, MetricSpec};
use crate::centrality::{CentralityVector, MetricKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, Neighbors};

/// Per-(graph, α, direction) precomputation shared by all five kernels.
///
/// Building it is `O(n + Σ degree)`; each kernel afterwards is a single pass
/// over the relevant arcs.
pub struct Distinctiveness<'g> {
    graph: &'g Graph,
    alpha: f64,
    direction: Direction,
    /// `log10((n-1) / g_j^α)` for every potential peer `j`.
    log_factor: Vec<f64>,
    /// `1 / g_j^α`.
    inv_degree_pow: Vec<f64>,
    /// `Σ_k w_jk^α` over the peer-side arcs of `j`.
    alpha_strength: Vec<f64>,
    total_weight: f64,
    isolates: Vec<usize>,
}

impl<'g> Distinctiveness<'g> {
    pub fn new(graph: &'g Graph, alpha: f64, direction: Direction) -> Result<Self> {
        check_alpha(alpha, false)?;
        Self::prepare(graph, alpha, direction)
    }

    /// Like [`Distinctiveness::new`] but accepts `0 < alpha < 1`.
    pub fn relaxed(graph: &'g Graph, alpha: f64, direction: Direction) -> Result<Self> {
        check_alpha(alpha, true)?;
        Self::prepare(graph, alpha, direction)
    }

    fn prepare(graph: &'g Graph, alpha: f64, direction: Direction) -> Result<Self> {
        match (graph.is_directed(), direction) {
            (false, Direction::Undirected) | (true, Direction::In | Direction::Out) => {}
            (directed, d) => {
                return Err(Error::DirectionMismatch {
                    direction: d.as_str(),
                    kind: if directed { "directed" } else { "undirected" },
                })
            }
        }

        let n = graph.node_count();
        let n1 = (n - 1) as f64;
        let mut log_factor = Vec::with_capacity(n);
        let mut inv_degree_pow = Vec::with_capacity(n);
        let mut alpha_strength = Vec::with_capacity(n);
        for j in 0..n {
            // In-metrics look at the sender's out-arcs, out-metrics at the
            // receiver's in-arcs; undirected graphs have a single arc set.
            let (g, peer_arcs): (usize, Neighbors<'_>) = match direction {
                Direction::In => (graph.out_degree(j), graph.out_neighbors(j)),
                _ => (graph.in_degree(j), graph.in_neighbors(j)),
            };
            let g_pow = (g as f64).powf(alpha);
            log_factor.push((n1 / g_pow).log10());
            inv_degree_pow.push(1.0 / g_pow);
            alpha_strength.push(peer_arcs.map(|(_, w)| w.powf(alpha)).sum());
        }

        Ok(Distinctiveness {
            graph,
            alpha,
            direction,
            log_factor,
            inv_degree_pow,
            alpha_strength,
            total_weight: graph.total_weight(),
            isolates: graph.isolates(),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Arcs summed over for node `i`: `(peer, weight)`.
    #[inline]
    fn arcs(&self, i: usize) -> Neighbors<'g> {
        match self.direction {
            Direction::In => self.graph.in_neighbors(i),
            _ => self.graph.out_neighbors(i),
        }
    }

    fn collect(&self, metric: MetricId, term: impl Fn(usize, f64) -> f64) -> CentralityVector {
        let scores = (0..self.graph.node_count())
            .map(|i| self.arcs(i).map(|(j, w)| term(j, w)).sum())
            .collect();
        let spec = MetricSpec {
            metric,
            alpha: self.alpha,
            direction: self.direction,
        };
        CentralityVector::new(
            MetricKind::Distinctiveness(spec),
            Arc::clone(self.graph.labels()),
            scores,
            self.isolates.clone(),
        )
    }

    pub fn d1(&self) -> CentralityVector {
        self.collect(MetricId::D1, |j, w| w * self.log_factor[j])
    }

    pub fn d2(&self) -> CentralityVector {
        self.collect(MetricId::D2, |j, _| self.log_factor[j])
    }

    pub fn d3(&self) -> CentralityVector {
        let (t, a) = (self.total_weight, self.alpha);
        self.collect(MetricId::D3, |j, w| {
            w * (t / (self.alpha_strength[j] - w.powf(a) + 1.0)).log10()
        })
    }

    pub fn d4(&self) -> CentralityVector {
        let a1 = self.alpha + 1.0;
        self.collect(MetricId::D4, |j, w| w.powf(a1) / self.alpha_strength[j])
    }

    pub fn d5(&self) -> CentralityVector {
        self.collect(MetricId::D5, |j, _| self.inv_degree_pow[j])
    }

    pub fn metric(&self, id: MetricId) -> CentralityVector {
        match id {
            MetricId::D1 => self.d1(),
            MetricId::D2 => self.d2(),
            MetricId::D3 => self.d3(),
            MetricId::D4 => self.d4(),
            MetricId::D5 => self.d5(),
        }
    }

    /// All five metrics, in `MetricId::ALL` order.
    pub fn all(&self) -> [CentralityVector; 5] {
        MetricId::ALL.map(|id| self.metric(id))
    }
}

/// Evaluates one metric. The spec's alpha was validated at construction, so
/// relaxed specs are honoured here.
pub fn compute(graph: &Graph, spec: &MetricSpec) -> Result<CentralityVector> {
    check_alpha(spec.alpha, true)?;
    Ok(Distinctiveness::prepare(graph, spec.alpha, spec.direction)?.metric(spec.metric))
}

macro_rules! metric_fn {
    ($name:ident, $id:expr, $doc:literal) => {
        #[doc = $doc]
        pub fn $name(graph: &Graph, alpha: f64, direction: Direction) -> Result<CentralityVector> {
            Ok(Distinctiveness::new(graph, alpha, direction)?.metric($id))
        }
    };
}

metric_fn!(d1, MetricId::D1, "Weighted distinctiveness centrality.");
metric_fn!(d2, MetricId::D2, "Distinctiveness centrality (arc indicator instead of weight).");
metric_fn!(d3, MetricId::D3, "Global-weight distinctiveness centrality.");
metric_fn!(d4, MetricId::D4, "Weighted proportional distinctiveness centrality.");
metric_fn!(d5, MetricId::D5, "Proportional distinctiveness centrality.");
