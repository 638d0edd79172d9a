//! Shortest-path baselines: closeness and Brandes betweenness.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, VecDeque};

use super::{require_undirected, vector, BaselineId};
use crate::centrality::CentralityVector;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Relative slack under which two weighted path lengths count as equal.
const PATH_EPS: f64 = 1e-12;

struct SingleSource {
    /// Nodes in non-decreasing distance order.
    order: Vec<usize>,
    dist: Vec<f64>,
    sigma: Vec<f64>,
    preds: Vec<Vec<usize>>,
}

#[derive(PartialEq)]
struct Entry(f64, usize);

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    // Min-heap on distance, ties broken by node index.
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

fn single_source(graph: &Graph, s: usize, weighted: bool) -> SingleSource {
    let n = graph.node_count();
    let mut sp = SingleSource {
        order: Vec::with_capacity(n),
        dist: vec![f64::INFINITY; n],
        sigma: vec![0.0; n],
        preds: vec![Vec::new(); n],
    };
    sp.dist[s] = 0.0;
    sp.sigma[s] = 1.0;

    if !weighted {
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            sp.order.push(u);
            let du = sp.dist[u];
            for (v, _) in graph.out_neighbors(u) {
                if sp.dist[v].is_infinite() {
                    sp.dist[v] = du + 1.0;
                    queue.push_back(v);
                }
                if sp.dist[v] == du + 1.0 {
                    sp.sigma[v] += sp.sigma[u];
                    sp.preds[v].push(u);
                }
            }
        }
        return sp;
    }

    let mut done = vec![false; n];
    let mut heap = BinaryHeap::from([Entry(0.0, s)]);
    while let Some(Entry(du, u)) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        sp.order.push(u);
        for (v, w) in graph.out_neighbors(u) {
            if done[v] {
                continue;
            }
            let alt = du + 1.0 / w;
            let cur = sp.dist[v];
            if (alt - cur).abs() <= PATH_EPS * alt.max(1.0) {
                sp.sigma[v] += sp.sigma[u];
                sp.preds[v].push(u);
            } else if alt < cur {
                sp.dist[v] = alt;
                sp.sigma[v] = sp.sigma[u];
                sp.preds[v].clear();
                sp.preds[v].push(u);
                heap.push(Entry(alt, v));
            }
        }
    }
    sp
}

/// Normalised closeness `(n - 1) / Σ_t d(s, t)`.
///
/// Weighted mode measures paths with arc length `1 / w`. Fails on
/// disconnected graphs, naming one unreachable pair.
pub fn closeness_centrality(graph: &Graph, weighted: bool) -> Result<CentralityVector> {
    require_undirected(graph, "closeness")?;
    let n = graph.node_count();
    let mut scores = Vec::with_capacity(n);
    for s in 0..n {
        let sp = single_source(graph, s, weighted);
        if sp.order.len() < n {
            let t = (0..n).find(|&t| sp.dist[t].is_infinite()).unwrap();
            return Err(Error::Disconnected {
                metric: "closeness",
                from: graph.label(s).to_owned(),
                to: graph.label(t).to_owned(),
            });
        }
        let total: f64 = sp.dist.iter().sum();
        scores.push((n - 1) as f64 / total);
    }
    Ok(vector(graph, BaselineId::Closeness, weighted, scores))
}

/// Non-normalised shortest-path betweenness (Brandes' accumulation).
///
/// Undirected graphs count each unordered pair once. Directed graphs follow
/// arc direction. Unreachable pairs contribute nothing.
pub fn betweenness_centrality(graph: &Graph, weighted: bool) -> CentralityVector {
    let n = graph.node_count();
    let mut bc = vec![0.0; n];
    let mut delta = vec![0.0; n];
    for s in 0..n {
        let sp = single_source(graph, s, weighted);
        delta.iter_mut().for_each(|d| *d = 0.0);
        for &w in sp.order.iter().rev() {
            let coeff = (1.0 + delta[w]) / sp.sigma[w];
            for &v in &sp.preds[w] {
                delta[v] += sp.sigma[v] * coeff;
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
    }
    if !graph.is_directed() {
        bc.iter_mut().for_each(|b| *b /= 2.0);
    }
    vector(graph, BaselineId::Betweenness, weighted, bc)
}
