//! Fixtures shared by the benchmarks.

use distinctiveness::{barabasi_albert, GeneratorParams, Graph};

/// Barabási–Albert graph with `m = 2` and weights in 1..=20, fixed seed.
pub fn ba_graph(n: usize) -> Graph {
    barabasi_albert(&GeneratorParams::new(n, 2, 1, 20, 42)).expect("valid generator parameters")
}
