use super::{require_undirected, vector, BaselineId};
use crate::centrality::CentralityVector;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::profile::weak_components;

pub const EIGEN_TOLERANCE: f64 = 1e-10;
pub const EIGEN_MAX_ITER: usize = 10_000;

/// Dominant eigenvector of the (weighted) adjacency matrix, unit 2-norm,
/// positive orientation.
///
/// Power iteration runs on `A + I`, which has the same dominant eigenvector
/// but does not oscillate on bipartite graphs. Stops once successive iterates
/// differ by less than [`EIGEN_TOLERANCE`] in 2-norm.
pub fn eigenvector_centrality(graph: &Graph, weighted: bool) -> Result<CentralityVector> {
    require_undirected(graph, "eigenvector centrality")?;
    let (comp, count) = weak_components(graph);
    if count > 1 {
        let far = comp.iter().position(|&c| c != comp[0]).unwrap();
        return Err(Error::Disconnected {
            metric: "eigenvector centrality",
            from: graph.label(0).to_owned(),
            to: graph.label(far).to_owned(),
        });
    }

    let n = graph.node_count();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut next = vec![0.0; n];
    for _ in 0..EIGEN_MAX_ITER {
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc = x[i];
            for (j, w) in graph.neighbors(i) {
                acc += if weighted { w * x[j] } else { x[j] };
            }
            *slot = acc;
        }
        let norm = next.iter().map(|v| v * v).sum::<f64>().sqrt();
        next.iter_mut().for_each(|v| *v /= norm);
        let diff = x
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        std::mem::swap(&mut x, &mut next);
        if diff < EIGEN_TOLERANCE {
            return Ok(vector(graph, BaselineId::Eigenvector, weighted, x));
        }
    }
    Err(Error::NonConvergence {
        iterations: EIGEN_MAX_ITER,
    })
}
