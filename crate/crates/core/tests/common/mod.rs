//! Independent reference implementations used as test oracles. They work on
//! a dense weight matrix and follow the metric definitions literally, sharing
//! no code with the library kernels.

#![allow(dead_code)]

use distinctiveness::{build_graph, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense weighted adjacency; `w[i][j] > 0` iff arc `i -> j` exists.
#[derive(Debug, Clone)]
pub struct Dense {
    pub directed: bool,
    pub labels: Vec<String>,
    pub w: Vec<Vec<f64>>,
}

impl Dense {
    pub fn from_graph(g: &Graph) -> Dense {
        let n = g.node_count();
        let mut w = vec![vec![0.0; n]; n];
        for (u, v, x) in g.edges() {
            w[u][v] = x;
            if !g.is_directed() {
                w[v][u] = x;
            }
        }
        Dense {
            directed: g.is_directed(),
            labels: g.labels().to_vec(),
            w,
        }
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn out_degree(&self, j: usize) -> usize {
        self.w[j].iter().filter(|&&x| x > 0.0).count()
    }

    pub fn in_degree(&self, j: usize) -> usize {
        (0..self.n()).filter(|&k| self.w[k][j] > 0.0).count()
    }

    pub fn total(&self) -> f64 {
        let mut t = 0.0;
        for i in 0..self.n() {
            for j in 0..self.n() {
                if self.directed || i < j {
                    t += self.w[i][j];
                }
            }
        }
        t
    }
}

/// Which arcs a node's score sums over.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Side {
    Undirected,
    In,
    Out,
}

/// D1..D5 (index 0..4) for every node, straight from the definitions.
pub fn naive_dc(d: &Dense, alpha: f64, side: Side) -> [Vec<f64>; 5] {
    let n = d.n();
    let nf = n as f64;
    let t = d.total();
    let mut out: [Vec<f64>; 5] = Default::default();
    for v in out.iter_mut() {
        *v = vec![0.0; n];
    }
    for i in 0..n {
        for j in 0..n {
            // (w, g_j, S_j^alpha) for the arc linking i and j on this side.
            let (w, g, s) = match side {
                Side::Undirected | Side::Out => {
                    let w = d.w[i][j];
                    let g = d.in_degree(j) as f64;
                    let s: f64 = (0..n).map(|k| d.w[k][j]).filter(|&x| x > 0.0).map(|x| x.powf(alpha)).sum();
                    (w, g, s)
                }
                Side::In => {
                    let w = d.w[j][i];
                    let g = d.out_degree(j) as f64;
                    let s: f64 = d.w[j].iter().filter(|&&x| x > 0.0).map(|x| x.powf(alpha)).sum();
                    (w, g, s)
                }
            };
            if w <= 0.0 {
                continue;
            }
            out[0][i] += w * ((nf - 1.0) / g.powf(alpha)).log10();
            out[1][i] += ((nf - 1.0) / g.powf(alpha)).log10();
            out[2][i] += w * (t / (s - w.powf(alpha) + 1.0)).log10();
            out[3][i] += w.powf(alpha + 1.0) / s;
            out[4][i] += 1.0 / g.powf(alpha);
        }
    }
    out
}

/// All-pairs shortest path lengths by Floyd–Warshall; arc length is 1, or
/// `1 / w` when `weighted`.
pub fn floyd(d: &Dense, weighted: bool) -> Vec<Vec<f64>> {
    let n = d.n();
    let mut dist = vec![vec![f64::INFINITY; n]; n];
    for i in 0..n {
        dist[i][i] = 0.0;
        for j in 0..n {
            if d.w[i][j] > 0.0 {
                dist[i][j] = if weighted { 1.0 / d.w[i][j] } else { 1.0 };
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = dist[i][k] + dist[k][j];
                if via < dist[i][j] {
                    dist[i][j] = via;
                }
            }
        }
    }
    dist
}

fn same(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

/// Betweenness by explicit enumeration of every shortest path. Exponential
/// in the worst case; meant for graphs with a dozen nodes.
pub fn enumerated_betweenness(d: &Dense, weighted: bool) -> Vec<f64> {
    let n = d.n();
    let dist = floyd(d, weighted);
    let len = |i: usize, j: usize| if weighted { 1.0 / d.w[i][j] } else { 1.0 };

    fn walk(
        d: &Dense,
        dist: &[Vec<f64>],
        len: &dyn Fn(usize, usize) -> f64,
        path: &mut Vec<usize>,
        t: usize,
        paths: &mut Vec<Vec<usize>>,
    ) {
        let u = *path.last().unwrap();
        if u == t {
            paths.push(path.clone());
            return;
        }
        for v in 0..d.n() {
            if d.w[u][v] > 0.0 && same(len(u, v) + dist[v][t], dist[u][t]) {
                path.push(v);
                walk(d, dist, len, path, t, paths);
                path.pop();
            }
        }
    }

    let mut bc = vec![0.0; n];
    for s in 0..n {
        for t in 0..n {
            if s == t || dist[s][t].is_infinite() {
                continue;
            }
            let mut paths = Vec::new();
            walk(d, &dist, &len, &mut vec![s], t, &mut paths);
            let total = paths.len() as f64;
            for p in &paths {
                for &v in &p[1..p.len() - 1] {
                    bc[v] += 1.0 / total;
                }
            }
        }
    }
    if !d.directed {
        for x in &mut bc {
            *x /= 2.0;
        }
    }
    bc
}

/// Random graph on `n` nodes with edge probability `p` and integer weights in
/// `1..=max_w`. A spanning path is added first when `connected` is set.
pub fn random_graph(seed: u64, n: usize, p: f64, max_w: u32, directed: bool, connected: bool) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    if connected {
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.random_range(0..=i));
        }
        for k in 1..n {
            edges.push((perm[k - 1], perm[k]));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j || (!directed && j < i) {
                continue;
            }
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    if edges.is_empty() {
        edges.push((0, 1));
    }
    let mut seen = std::collections::HashSet::new();
    edges.retain(|&(u, v)| seen.insert(if directed || u < v { (u, v) } else { (v, u) }));
    let labelled: Vec<(String, String, f64)> = edges
        .into_iter()
        .map(|(u, v)| (format!("n{u}"), format!("n{v}"), f64::from(rng.random_range(1..=max_w))))
        .collect();
    build_graph(labelled, directed).unwrap().0
}

/// Relative closeness; scores below 1 in magnitude are compared absolutely,
/// since sums of signed log terms can cancel to near zero.
pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
