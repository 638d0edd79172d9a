//! Degree/strength profiles and advisory validation.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Per-node degrees and strengths plus the global weight statistics that the
/// analytic bounds are expressed in.
///
/// For undirected graphs the in/out vectors coincide with `degree`/`strength`.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeProfile {
    pub directed: bool,
    pub degree: Vec<usize>,
    pub out_degree: Vec<usize>,
    pub in_degree: Vec<usize>,
    pub strength: Vec<f64>,
    pub out_strength: Vec<f64>,
    pub in_strength: Vec<f64>,
    /// Node count `n`.
    pub n: usize,
    /// Smallest edge weight `m`.
    pub min_weight: f64,
    /// Largest edge weight `M`.
    pub max_weight: f64,
    pub total_weight: f64,
    pub edge_count: usize,
}

pub fn profile(graph: &Graph) -> DegreeProfile {
    let n = graph.node_count();
    let mut out_degree = Vec::with_capacity(n);
    let mut in_degree = Vec::with_capacity(n);
    let mut out_strength = Vec::with_capacity(n);
    let mut in_strength = Vec::with_capacity(n);
    for i in 0..n {
        out_degree.push(graph.out_degree(i));
        in_degree.push(graph.in_degree(i));
        out_strength.push(graph.out_neighbors(i).map(|(_, w)| w).sum());
        in_strength.push(graph.in_neighbors(i).map(|(_, w)| w).sum());
    }
    let (degree, strength) = if graph.is_directed() {
        (
            out_degree.iter().zip(&in_degree).map(|(a, b)| a + b).collect(),
            out_strength.iter().zip(&in_strength).map(|(a, b)| a + b).collect(),
        )
    } else {
        (out_degree.clone(), out_strength.clone())
    };
    DegreeProfile {
        directed: graph.is_directed(),
        degree,
        out_degree,
        in_degree,
        strength,
        out_strength,
        in_strength,
        n,
        min_weight: graph.min_weight(),
        max_weight: graph.max_weight(),
        total_weight: graph.total_weight(),
        edge_count: graph.edge_count(),
    }
}

/// Conditions under which the analytic bounds stop being guaranteed.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    /// Edges with weight below 1, as `(source, target, weight)`.
    pub sub_unit_weights: Vec<(String, String, f64)>,
    /// Number of (weakly) connected components.
    pub components: usize,
    pub isolates: Vec<String>,
    /// `m == M`: the graph is effectively unweighted.
    pub homogeneous_weights: bool,
}

impl ValidationReport {
    pub fn is_connected(&self) -> bool {
        self.components <= 1
    }

    /// True when nothing was flagged (uniform weights are informational).
    pub fn is_clean(&self) -> bool {
        self.sub_unit_weights.is_empty() && self.is_connected() && self.isolates.is_empty()
    }

    pub fn flags(&self) -> Vec<String> {
        let mut flags = Vec::new();
        for (s, t, w) in &self.sub_unit_weights {
            flags.push(format!("sub-unit weight {w} on {s} - {t}"));
        }
        if !self.is_connected() {
            flags.push(format!("graph has {} components", self.components));
        }
        for l in &self.isolates {
            flags.push(format!("isolated node {l}"));
        }
        flags
    }
}

pub fn validate(graph: &Graph) -> ValidationReport {
    let sub_unit_weights = graph
        .edges()
        .filter(|&(_, _, w)| w < 1.0)
        .map(|(u, v, w)| (graph.label(u).to_owned(), graph.label(v).to_owned(), w))
        .collect();
    ValidationReport {
        sub_unit_weights,
        components: weak_components(graph).1,
        isolates: graph
            .isolates()
            .into_iter()
            .map(|i| graph.label(i).to_owned())
            .collect(),
        homogeneous_weights: graph.min_weight() == graph.max_weight(),
    }
}

/// Component id per node (ignoring arc direction) and the component count.
pub(crate) fn weak_components(graph: &Graph) -> (Vec<usize>, usize) {
    let n = graph.node_count();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let nbrs = graph.out_neighbors(u).chain(graph.in_neighbors(u));
            for (v, _) in nbrs {
                if comp[v] == usize::MAX {
                    comp[v] = count;
                    queue.push_back(v);
                }
            }
        }
        count += 1;
    }
    (comp, count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, GraphBuilder};

    #[test]
    fn toy_profile() {
        let g = crate::datasets::builtin_dataset(crate::datasets::Dataset::ToyUndirected);
        let p = profile(&g);
        let deg = |l: &str| p.degree[g.index_of(l).unwrap()];
        assert_eq!(
            ["A", "B", "C", "D", "E", "F"].map(deg),
            [2, 4, 2, 2, 1, 1]
        );
        assert_eq!((p.min_weight, p.max_weight, p.total_weight), (2.0, 5.0, 21.0));
        assert_eq!(p.degree.iter().sum::<usize>(), 2 * p.edge_count);
    }

    #[test]
    fn directed_toy_profile() {
        let g = crate::datasets::builtin_dataset(crate::datasets::Dataset::ToyDirected);
        let p = profile(&g);
        let b = g.index_of("B").unwrap();
        assert_eq!((p.out_degree[b], p.in_degree[b]), (4, 1));
        assert_eq!(p.total_weight, 30.0);
        assert_eq!(
            p.out_degree.iter().sum::<usize>(),
            p.in_degree.iter().sum::<usize>()
        );
    }

    #[test]
    fn validation_flags() {
        let toy = crate::datasets::builtin_dataset(crate::datasets::Dataset::ToyUndirected);
        assert!(validate(&toy).is_clean());
        assert!(!validate(&toy).homogeneous_weights);

        let (g, _) = build_graph([("A", "B", 0.5), ("B", "C", 1.0)], false).unwrap();
        let r = validate(&g);
        assert_eq!(r.sub_unit_weights, vec![("A".into(), "B".into(), 0.5)]);

        let (g, _) = build_graph([("A", "B", 1.0), ("C", "D", 1.0)], false).unwrap();
        let r = validate(&g);
        assert_eq!(r.components, 2);
        assert!(!r.is_connected());
        assert!(r.homogeneous_weights);

        let mut b = GraphBuilder::new(false);
        b.edge("A", "B", 1.0).unwrap();
        b.isolate("Z").unwrap();
        let r = validate(&b.build().unwrap().0);
        assert_eq!(r.isolates, ["Z"]);
        assert_eq!(r.flags().len(), 2);
    }
}
