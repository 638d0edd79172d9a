//! Mean Spearman correlation between distinctiveness metrics and every other
//! metric, as a function of alpha, over an ensemble of random graphs.

use std::fmt;
use std::str::FromStr;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::rank::{rank_scores, TieRule};
use super::spearman::spearman_ranks;
use crate::baselines::{compute_baseline, BaselineSpec};
use crate::datasets::{barabasi_albert, GeneratorParams};
use crate::error::{Error, Result};
use crate::metrics::{check_alpha, Direction, Distinctiveness, MetricId};

/// Seeds for ensemble members come from this ChaCha8 stream of the master seed.
const ENSEMBLE_STREAM: u64 = 2;

/// The metric a distinctiveness score is correlated against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Peer {
    Distinctiveness(MetricId),
    Baseline(BaselineSpec),
}

impl fmt::Display for Peer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Peer::Distinctiveness(m) => m.fmt(f),
            Peer::Baseline(b) => b.fmt(f),
        }
    }
}

impl FromStr for Peer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<MetricId>()
            .map(Peer::Distinctiveness)
            .or_else(|_| s.parse::<BaselineSpec>().map(Peer::Baseline))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub metric: MetricId,
    pub peer: Peer,
    /// Mean rho per alpha, over the graphs where rho was defined.
    pub mean_rho: Vec<f64>,
    /// Largest |rho| seen on any single graph, per alpha.
    pub max_abs_rho: Vec<f64>,
    /// Graphs contributing to the mean, per alpha.
    pub graphs: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepEventKind {
    /// One side had constant scores.
    Undefined,
    /// |rho| = 1 between a distinctiveness metric and a baseline.
    Perfect(f64),
}

/// Per-graph anomaly, logged rather than failing the sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepEvent {
    pub graph: usize,
    pub alpha: f64,
    pub metric: MetricId,
    pub peer: Peer,
    pub kind: SweepEventKind,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationSweep {
    pub alphas: Vec<f64>,
    pub rows: Vec<SweepRow>,
    pub ensemble_size: usize,
    /// Generator settings; `seed` holds the master seed of the ensemble.
    pub generator: GeneratorParams,
    pub events: Vec<SweepEvent>,
}

impl CorrelationSweep {
    pub fn row(&self, metric: MetricId, peer: Peer) -> Option<&SweepRow> {
        self.rows.iter().find(|r| r.metric == metric && r.peer == peer)
    }

    /// Mean rho for `(metric, peer)` at `alpha`, if swept.
    pub fn mean(&self, metric: MetricId, peer: Peer, alpha: f64) -> Option<f64> {
        let k = self.alphas.iter().position(|&a| a == alpha)?;
        self.row(metric, peer).map(|r| r.mean_rho[k])
    }
}

/// Peers every distinctiveness metric is compared with: the five metrics
/// themselves, then all twelve baselines.
pub fn sweep_peers() -> Vec<Peer> {
    MetricId::ALL
        .iter()
        .map(|&m| Peer::Distinctiveness(m))
        .chain(BaselineSpec::all().into_iter().map(Peer::Baseline))
        .collect()
}

/// Per-graph rho values, indexed `[alpha][metric][peer]`.
type GraphRhos = Vec<Vec<Vec<Option<f64>>>>;

fn one_graph(params: &GeneratorParams, alphas: &[f64], peers: &[Peer]) -> Result<GraphRhos> {
    let graph = barabasi_albert(params)?;
    let mut baseline_ranks = Vec::new();
    for p in peers {
        if let Peer::Baseline(spec) = p {
            let v = compute_baseline(&graph, *spec)?;
            baseline_ranks.push(rank_scores(v.scores(), TieRule::Average));
        }
    }
    let mut out = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let dc = Distinctiveness::new(&graph, alpha, Direction::Undirected)?;
        let dc_ranks: Vec<Vec<f64>> = dc
            .all()
            .iter()
            .map(|v| rank_scores(v.scores(), TieRule::Average))
            .collect();
        let per_metric = dc_ranks
            .iter()
            .map(|mine| {
                let mut baselines = baseline_ranks.iter();
                peers
                    .iter()
                    .map(|p| {
                        let theirs = match p {
                            Peer::Distinctiveness(m) => &dc_ranks[*m as usize],
                            Peer::Baseline(_) => baselines.next().unwrap(),
                        };
                        spearman_ranks(mine, theirs)
                    })
                    .collect()
            })
            .collect();
        out.push(per_metric);
    }
    Ok(out)
}

/// Runs the sweep. Graph `i` of the ensemble is generated with the `i`-th
/// draw of a ChaCha8 stream keyed by `seed`; graphs are processed in
/// parallel but reduced in index order, so results are bitwise reproducible.
pub fn correlation_sweep(
    generator: &GeneratorParams,
    ensemble_size: usize,
    alphas: &[f64],
    seed: u64,
) -> Result<CorrelationSweep> {
    generator.validate()?;
    if ensemble_size == 0 {
        return Err(Error::InvalidGenerator("ensemble size must be >= 1".into()));
    }
    if alphas.is_empty() {
        return Err(Error::InvalidGenerator("no alpha values to sweep".into()));
    }
    for &a in alphas {
        check_alpha(a, false)?;
    }

    let mut seeder = ChaCha8Rng::seed_from_u64(seed);
    seeder.set_stream(ENSEMBLE_STREAM);
    let seeds: Vec<u64> = (0..ensemble_size).map(|_| seeder.next_u64()).collect();

    let peers = sweep_peers();
    let per_graph: Vec<GraphRhos> = seeds
        .par_iter()
        .map(|&s| one_graph(&generator.with_seed(s), alphas, &peers))
        .collect::<Result<_>>()?;

    let mut rows = Vec::new();
    let mut events = Vec::new();
    for (mi, &metric) in MetricId::ALL.iter().enumerate() {
        for (pi, &peer) in peers.iter().enumerate() {
            let mut row = SweepRow {
                metric,
                peer,
                mean_rho: Vec::with_capacity(alphas.len()),
                max_abs_rho: Vec::with_capacity(alphas.len()),
                graphs: Vec::with_capacity(alphas.len()),
            };
            for (ai, &alpha) in alphas.iter().enumerate() {
                let (mut sum, mut count, mut max_abs) = (0.0, 0usize, 0.0f64);
                for (gi, rhos) in per_graph.iter().enumerate() {
                    match rhos[ai][mi][pi] {
                        Some(rho) => {
                            sum += rho;
                            count += 1;
                            max_abs = max_abs.max(rho.abs());
                            if matches!(peer, Peer::Baseline(_)) && rho.abs() >= 1.0 {
                                events.push(SweepEvent {
                                    graph: gi,
                                    alpha,
                                    metric,
                                    peer,
                                    kind: SweepEventKind::Perfect(rho),
                                });
                            }
                        }
                        None => events.push(SweepEvent {
                            graph: gi,
                            alpha,
                            metric,
                            peer,
                            kind: SweepEventKind::Undefined,
                        }),
                    }
                }
                row.mean_rho.push(if count > 0 { sum / count as f64 } else { f64::NAN });
                row.max_abs_rho.push(max_abs);
                row.graphs.push(count);
            }
            rows.push(row);
        }
    }

    Ok(CorrelationSweep {
        alphas: alphas.to_vec(),
        rows,
        ensemble_size,
        generator: generator.with_seed(seed),
        events,
    })
}
