//! Graph6 stream fixtures: one file per order with every connected graph on
//! up to 7 vertices, exactly one representative per isomorphism class.
//!
//! The streams live in `data/` at the repository root and are validated here
//! against the known census (1, 1, 2, 6, 21, 112, 853 connected graphs for
//! n = 1..7). The ignored `regenerate_graph6_fixtures` test rebuilds them
//! from scratch by vertex augmentation with canonical deduplication.

use std::collections::BTreeSet;
use std::path::PathBuf;

use critset_core::io::{parse_graph6, to_graph6};
use critset_core::ColourStructure;

const CONNECTED_COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];
const ALL_COUNTS: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("data")
}

pub fn fixture_path(n: usize) -> PathBuf {
    data_dir().join(format!("connected_n{n}.g6"))
}

// ---- tiny standalone graph representation on bitmasks -----------------

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn has_edge(mask: u32, a: usize, b: usize) -> bool {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    mask & (1 << pair_index(i, j)) != 0
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut stack = vec![0usize; n];
    out.push(perm.clone());
    let mut i = 0;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            out.push(perm.clone());
            stack[i] += 1;
            i = 0;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    out
}

fn relabelled(mask: u32, n: usize, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    for j in 1..n {
        for i in 0..j {
            if has_edge(mask, perm[i], perm[j]) {
                out |= 1 << pair_index(i, j);
            }
        }
    }
    out
}

fn canonical(mask: u32, n: usize, perms: &[Vec<usize>]) -> u32 {
    perms
        .iter()
        .map(|p| relabelled(mask, n, p))
        .min()
        .unwrap_or(mask)
}

fn is_connected_mask(mask: u32, n: usize) -> bool {
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if u != v && !seen[u] && has_edge(mask, u, v) {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == n
}

fn mask_to_structure(mask: u32, n: usize) -> ColourStructure {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if has_edge(mask, i, j) {
                edges.push((i, j));
            }
        }
    }
    ColourStructure::graph(n, &edges).expect("mask encodes a simple graph")
}

/// All graphs on 1..=7 vertices up to isomorphism, by augmenting each graph
/// on n-1 vertices with one new vertex attached in every possible way.
fn enumerate_all_graphs() -> Vec<Vec<u32>> {
    let mut levels: Vec<Vec<u32>> = vec![vec![0]]; // n = 1
    for n in 2..=7usize {
        let perms = permutations(n);
        let mut set = BTreeSet::new();
        for &g in &levels[n - 2] {
            for attach in 0..(1u32 << (n - 1)) {
                let mut mask = g;
                for i in 0..n - 1 {
                    if attach & (1 << i) != 0 {
                        mask |= 1 << pair_index(i, n - 1);
                    }
                }
                set.insert(canonical(mask, n, &perms));
            }
        }
        levels.push(set.into_iter().collect());
    }
    levels
}

#[test]
#[ignore = "rebuilds data/connected_n*.g6; run explicitly when the fixtures change"]
fn regenerate_graph6_fixtures() {
    let levels = enumerate_all_graphs();
    for (i, level) in levels.iter().enumerate() {
        assert_eq!(
            level.len(),
            ALL_COUNTS[i],
            "graph census mismatch at order {}",
            i + 1
        );
    }
    std::fs::create_dir_all(data_dir()).unwrap();
    for (i, level) in levels.iter().enumerate() {
        let n = i + 1;
        let connected: Vec<u32> = level
            .iter()
            .copied()
            .filter(|&m| is_connected_mask(m, n))
            .collect();
        assert_eq!(connected.len(), CONNECTED_COUNTS[i]);
        let mut out = String::new();
        for &mask in &connected {
            out.push_str(&to_graph6(&mask_to_structure(mask, n)).unwrap());
            out.push('\n');
        }
        std::fs::write(fixture_path(n), out).unwrap();
    }
}

#[test]
fn fixtures_match_the_census() {
    for n in 1..=7usize {
        let path = fixture_path(n);
        let text = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("missing fixture {}: {e}", path.display()));
        let mut count = 0;
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let g = parse_graph6(line).unwrap_or_else(|e| panic!("{line}: {e}"));
            assert_eq!(g.n(), n);
            assert!(g.is_connected(), "{line} is disconnected");
            count += 1;
        }
        assert_eq!(count, CONNECTED_COUNTS[n - 1], "order {n}");
    }
}

#[test]
fn fixture_records_are_pairwise_distinct() {
    for n in 1..=7usize {
        let text = std::fs::read_to_string(fixture_path(n)).unwrap();
        let lines: BTreeSet<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        assert_eq!(lines.len(), CONNECTED_COUNTS[n - 1]);
    }
}
