//! Shared helpers for the integration suites: fixture loading, seeded random
//! instances, and the naive reference oracle.

#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;

use critset_core::rng::SplitMix64;
use critset_core::ColourStructure;

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("data")
}

/// All connected graphs of one order, as graph6 lines.
pub fn stream(n: usize) -> Vec<String> {
    let path = data_dir().join(format!("connected_n{n}.g6"));
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing fixture {} ({e})", path.display()))
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(String::from)
        .collect()
}

pub fn streams(orders: impl IntoIterator<Item = usize>) -> Vec<String> {
    orders.into_iter().flat_map(stream).collect()
}

/// Random graph with each edge kept with probability `percent`/100.
pub fn random_graph(rng: &mut SplitMix64, n: usize, percent: usize) -> ColourStructure {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.below(100) < percent {
                edges.push((i, j));
            }
        }
    }
    ColourStructure::graph(n, &edges).expect("valid random graph")
}

pub fn random_connected_graph(rng: &mut SplitMix64, n: usize, percent: usize) -> ColourStructure {
    loop {
        let g = random_graph(rng, n, percent);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random recursive tree: vertex v attaches to a uniform earlier vertex.
pub fn random_tree(rng: &mut SplitMix64, n: usize) -> ColourStructure {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.below(v), v));
    }
    ColourStructure::graph(n, &edges).expect("valid random tree")
}

/// Random hypergraph with `m` edges of size 2..=4 on `n` vertices (distinct
/// vertices per edge, duplicate edges retried).
pub fn random_hypergraph(rng: &mut SplitMix64, n: usize, m: usize) -> ColourStructure {
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut guard = 0;
    while edges.len() < m && guard < 1000 {
        guard += 1;
        let size = 2 + rng.below(3);
        let mut e: Vec<usize> = Vec::new();
        while e.len() < size.min(n) {
            let v = rng.below(n);
            if !e.contains(&v) {
                e.push(v);
            }
        }
        e.sort_unstable();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    ColourStructure::new(n, edges).expect("valid random hypergraph")
}
