//! Barabási–Albert preferential attachment with uniform integer weights.
//!
//! Growth starts from a star on `m_attach + 1` nodes (node 0 is the hub).
//! Each later node `v` picks `m_attach` distinct targets by drawing uniformly
//! from an urn holding every node once per incident edge end, then adds its
//! own `m_attach` copies and those of its targets to the urn.
//!
//! Randomness comes from ChaCha8 seeded with `seed`: stream 0 drives the
//! topology, stream 1 the weights, so the weight range never perturbs the
//! topology for a given seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

const TOPOLOGY_STREAM: u64 = 0;
const WEIGHT_STREAM: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorParams {
    pub n: usize,
    pub m_attach: usize,
    pub weight_low: u32,
    pub weight_high: u32,
    pub seed: u64,
}

impl GeneratorParams {
    /// `n` nodes, `m_attach` edges per new node, weights uniform in
    /// `[weight_low, weight_high]`.
    pub fn new(n: usize, m_attach: usize, weight_low: u32, weight_high: u32, seed: u64) -> Self {
        GeneratorParams {
            n,
            m_attach,
            weight_low,
            weight_high,
            seed,
        }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        GeneratorParams { seed, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.m_attach < 1 || self.m_attach >= self.n {
            return Err(Error::InvalidGenerator(format!(
                "need 1 <= m_attach < n, got m_attach = {}, n = {}",
                self.m_attach, self.n
            )));
        }
        if self.weight_low < 1 || self.weight_low > self.weight_high {
            return Err(Error::InvalidGenerator(format!(
                "need 1 <= weight_low <= weight_high, got [{}, {}]",
                self.weight_low, self.weight_high
            )));
        }
        Ok(())
    }

    /// Edges produced for these parameters: `m_attach · (n - m_attach)`.
    pub fn expected_edges(&self) -> usize {
        self.m_attach * (self.n - self.m_attach)
    }
}

pub fn barabasi_albert(params: &GeneratorParams) -> Result<Graph> {
    params.validate()?;
    let GeneratorParams { n, m_attach: m, .. } = *params;

    let mut topo = ChaCha8Rng::seed_from_u64(params.seed);
    topo.set_stream(TOPOLOGY_STREAM);
    let mut weights = ChaCha8Rng::seed_from_u64(params.seed);
    weights.set_stream(WEIGHT_STREAM);

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(params.expected_edges());
    let mut urn: Vec<usize> = Vec::with_capacity(2 * params.expected_edges());
    for leaf in 1..=m {
        edges.push((0, leaf));
        urn.push(0);
        urn.push(leaf);
    }

    let mut targets: Vec<usize> = Vec::with_capacity(m);
    for source in m + 1..n {
        targets.clear();
        while targets.len() < m {
            let t = urn[topo.random_range(0..urn.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((source, t));
        }
        urn.extend_from_slice(&targets);
        urn.extend(std::iter::repeat_n(source, m));
    }

    let mut b = GraphBuilder::with_capacity(false, n, edges.len());
    for i in 0..n {
        b.node(&i.to_string())?;
    }
    for (u, v) in edges {
        let w = weights.random_range(params.weight_low..=params.weight_high);
        b.edge_by_index(u, v, f64::from(w))?;
    }
    Ok(b.build()?.0)
}
