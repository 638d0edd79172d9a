//! Immutable weighted graphs.
//!
//! A [`Graph`] is built once through [`GraphBuilder`] (or [`build_graph`]) and
//! never mutated afterwards. Adjacency is stored in compressed sparse rows with
//! neighbours sorted by node index, so every per-node sum runs in a fixed order.
//! Directed graphs materialise both the out- and the in-adjacency.
//!
//! Node identity is the string label. Indices are dense `0..n` in
//! first-appearance order and only used internally and by the metric kernels.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
pub(crate) struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    weights: Vec<f64>,
}

impl Adjacency {
    /// `arcs` must be sorted by (source, target) and free of duplicates.
    fn from_sorted(n: usize, arcs: impl Iterator<Item = (u32, u32, f64)>) -> Self {
        let mut offsets = vec![0usize; n + 1];
        let mut targets = Vec::new();
        let mut weights = Vec::new();
        for (u, v, w) in arcs {
            offsets[u as usize + 1] += 1;
            targets.push(v);
            weights.push(w);
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        Adjacency {
            offsets,
            targets,
            weights,
        }
    }

    #[inline]
    fn row(&self, i: usize) -> (&[u32], &[f64]) {
        let (a, b) = (self.offsets[i], self.offsets[i + 1]);
        (&self.targets[a..b], &self.weights[a..b])
    }

    #[inline]
    fn len_of(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    fn bytes(&self) -> usize {
        self.offsets.capacity() * std::mem::size_of::<usize>()
            + self.targets.capacity() * std::mem::size_of::<u32>()
            + self.weights.capacity() * std::mem::size_of::<f64>()
    }
}

/// Neighbour iterator yielding `(node index, weight)` in ascending index order.
#[derive(Clone)]
pub struct Neighbors<'a> {
    targets: std::slice::Iter<'a, u32>,
    weights: std::slice::Iter<'a, f64>,
}

impl Iterator for Neighbors<'_> {
    type Item = (usize, f64);

    #[inline]
    fn next(&mut self) -> Option<Self::Item> {
        Some((*self.targets.next()? as usize, *self.weights.next()?))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.targets.size_hint()
    }
}

impl ExactSizeIterator for Neighbors<'_> {}

/// An immutable weighted graph, directed or undirected, without self-loops.
#[derive(Clone)]
pub struct Graph {
    labels: Arc<[String]>,
    index: HashMap<String, usize>,
    directed: bool,
    out: Adjacency,
    inc: Option<Adjacency>,
    edge_count: usize,
    total_weight: f64,
    min_weight: f64,
    max_weight: f64,
}

impl Graph {
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of undirected edges, or of arcs for a directed graph.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn labels(&self) -> &Arc<[String]> {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Sum of weights over undirected edges counted once, or over all arcs.
    pub fn total_weight(&self) -> f64 {
        self.total_weight
    }

    pub fn min_weight(&self) -> f64 {
        self.min_weight
    }

    pub fn max_weight(&self) -> f64 {
        self.max_weight
    }

    /// Neighbours of an undirected node; out-neighbours for a directed one.
    pub fn neighbors(&self, i: usize) -> Neighbors<'_> {
        self.out_neighbors(i)
    }

    pub fn out_neighbors(&self, i: usize) -> Neighbors<'_> {
        let (t, w) = self.out.row(i);
        Neighbors {
            targets: t.iter(),
            weights: w.iter(),
        }
    }

    pub fn in_neighbors(&self, i: usize) -> Neighbors<'_> {
        let (t, w) = self.inc.as_ref().unwrap_or(&self.out).row(i);
        Neighbors {
            targets: t.iter(),
            weights: w.iter(),
        }
    }

    /// Degree of an undirected node (out-degree for directed graphs).
    pub fn degree(&self, i: usize) -> usize {
        self.out.len_of(i)
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.out.len_of(i)
    }

    pub fn in_degree(&self, i: usize) -> usize {
        self.inc.as_ref().unwrap_or(&self.out).len_of(i)
    }

    /// Weight of the edge/arc `u -> v`, if present.
    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        let (t, w) = self.out.row(u);
        t.binary_search(&(v as u32)).ok().map(|k| w[k])
    }

    /// True when the node has no incident edge or arc.
    pub fn is_isolated(&self, i: usize) -> bool {
        self.out_degree(i) == 0 && self.in_degree(i) == 0
    }

    pub fn isolates(&self) -> Vec<usize> {
        (0..self.node_count()).filter(|&i| self.is_isolated(i)).collect()
    }

    /// Logical edges: `(u, v, w)` with `u < v` for undirected graphs, every
    /// arc for directed ones, ordered by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let directed = self.directed;
        (0..self.node_count()).flat_map(move |u| {
            self.out_neighbors(u)
                .filter(move |&(v, _)| directed || u < v)
                .map(move |(v, w)| (u, v, w))
        })
    }

    /// Heap bytes held by the adjacency structures and labels.
    pub fn memory_footprint(&self) -> usize {
        let labels: usize = self.labels.iter().map(|l| l.capacity() + 24).sum();
        let index = self.index.capacity() * (24 + 8 + 8);
        self.out.bytes() + self.inc.as_ref().map_or(0, Adjacency::bytes) + labels + index
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("directed", &self.directed)
            .field("nodes", &self.node_count())
            .field("edges", &self.edge_count)
            .finish()
    }
}

/// Labelled-graph equality: same directedness, same label set, same
/// weighted edges. Internal node order is not compared.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        if self.directed != other.directed
            || self.node_count() != other.node_count()
            || self.edge_count != other.edge_count
        {
            return false;
        }
        let mut map = Vec::with_capacity(self.node_count());
        for l in self.labels.iter() {
            match other.index_of(l) {
                Some(j) => map.push(j),
                None => return false,
            }
        }
        self.edges()
            .all(|(u, v, w)| other.weight(map[u], map[v]) == Some(w))
    }
}

/// What [`GraphBuilder::build`] did to the raw input.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BuildReport {
    /// Parallel edges folded into an existing edge by summing weights.
    pub merged_edges: usize,
    pub self_loops_dropped: usize,
    /// Labels of nodes that ended up without any edge.
    pub isolates: Vec<String>,
}

/// Incremental constructor for [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    directed: bool,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    arcs: Vec<(u32, u32, f64)>,
    self_loops: usize,
}

impl GraphBuilder {
    pub fn new(directed: bool) -> Self {
        GraphBuilder {
            directed,
            labels: Vec::new(),
            index: HashMap::new(),
            arcs: Vec::new(),
            self_loops: 0,
        }
    }

    pub fn with_capacity(directed: bool, nodes: usize, edges: usize) -> Self {
        GraphBuilder {
            directed,
            labels: Vec::with_capacity(nodes),
            index: HashMap::with_capacity(nodes),
            arcs: Vec::with_capacity(edges),
            self_loops: 0,
        }
    }

    /// Interns `label`, returning its index. New labels append to node order.
    pub fn node(&mut self, label: &str) -> Result<usize> {
        if label.is_empty() {
            return Err(Error::EmptyLabel);
        }
        if let Some(&i) = self.index.get(label) {
            return Ok(i);
        }
        let i = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), i);
        Ok(i)
    }

    /// Declares a node that may stay isolated. Metric kernels score isolates 0
    /// and flag them.
    pub fn isolate(&mut self, label: &str) -> Result<&mut Self> {
        self.node(label)?;
        Ok(self)
    }

    pub fn edge(&mut self, source: &str, target: &str, weight: f64) -> Result<&mut Self> {
        if !(weight.is_finite() && weight > 0.0) {
            return Err(Error::InvalidWeight {
                from: source.to_owned(),
                to: target.to_owned(),
                weight,
            });
        }
        let u = self.node(source)?;
        let v = self.node(target)?;
        self.push(u, v, weight);
        Ok(self)
    }

    /// Adds an edge between already interned nodes.
    pub fn edge_by_index(&mut self, u: usize, v: usize, weight: f64) -> Result<&mut Self> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(Error::UnknownNode(format!("#{}", u.max(v))));
        }
        if !(weight.is_finite() && weight > 0.0) {
            return Err(Error::InvalidWeight {
                from: self.labels[u].clone(),
                to: self.labels[v].clone(),
                weight,
            });
        }
        self.push(u, v, weight);
        Ok(self)
    }

    fn push(&mut self, u: usize, v: usize, w: f64) {
        if u == v {
            self.self_loops += 1;
            return;
        }
        let (a, b) = if self.directed || u < v { (u, v) } else { (v, u) };
        self.arcs.push((a as u32, b as u32, w));
    }

    pub fn build(self) -> Result<(Graph, BuildReport)> {
        let GraphBuilder {
            directed,
            labels,
            index,
            mut arcs,
            self_loops,
        } = self;
        if arcs.is_empty() {
            return Err(Error::EmptyEdgeList);
        }
        let n = labels.len();
        assert!(n <= u32::MAX as usize, "node count exceeds u32 index space");

        // Sorting on the weight too makes merged sums independent of input order.
        arcs.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)).then(a.2.total_cmp(&b.2)));
        let mut merged: Vec<(u32, u32, f64)> = Vec::with_capacity(arcs.len());
        let mut merged_edges = 0;
        for (u, v, w) in arcs {
            match merged.last_mut() {
                Some(last) if last.0 == u && last.1 == v => {
                    last.2 += w;
                    merged_edges += 1;
                }
                _ => merged.push((u, v, w)),
            }
        }

        let edge_count = merged.len();
        let mut total_weight = 0.0;
        let mut min_weight = f64::INFINITY;
        let mut max_weight = 0.0f64;
        for &(_, _, w) in &merged {
            total_weight += w;
            min_weight = min_weight.min(w);
            max_weight = max_weight.max(w);
        }

        let (out, inc) = if directed {
            let out = Adjacency::from_sorted(n, merged.iter().copied());
            let mut rev: Vec<(u32, u32, f64)> = merged.iter().map(|&(u, v, w)| (v, u, w)).collect();
            rev.sort_unstable_by_key(|&(a, b, _)| (a, b));
            (out, Some(Adjacency::from_sorted(n, rev.into_iter())))
        } else {
            let mut both: Vec<(u32, u32, f64)> = Vec::with_capacity(2 * merged.len());
            for &(u, v, w) in &merged {
                both.push((u, v, w));
                both.push((v, u, w));
            }
            drop(merged);
            both.sort_unstable_by_key(|&(a, b, _)| (a, b));
            (Adjacency::from_sorted(n, both.into_iter()), None)
        };

        let graph = Graph {
            labels: labels.into(),
            index,
            directed,
            out,
            inc,
            edge_count,
            total_weight,
            min_weight,
            max_weight,
        };
        let report = BuildReport {
            merged_edges,
            self_loops_dropped: self_loops,
            isolates: graph
                .isolates()
                .into_iter()
                .map(|i| graph.label(i).to_owned())
                .collect(),
        };
        Ok((graph, report))
    }
}

/// Builds a graph from `(source, target, weight)` triples.
///
/// Parallel edges are merged by summing their weights and self-loops are
/// dropped; both are counted in the returned [`BuildReport`].
pub fn build_graph<I, S>(edges: I, directed: bool) -> Result<(Graph, BuildReport)>
where
    I: IntoIterator<Item = (S, S, f64)>,
    S: AsRef<str>,
{
    let mut b = GraphBuilder::new(directed);
    for (s, t, w) in edges {
        b.edge(s.as_ref(), t.as_ref(), w)?;
    }
    b.build()
}
