//! The polynomial recurrence for the Sudoku number of trees, and the exact
//! r-domination number used to bound it.

use crate::combi::Combinations;
use crate::error::{Error, Result};
use crate::model::ColourStructure;

/// Sudoku number of a tree for k >= 3 colours, by the leaf-pruning
/// recurrence:
///
/// * stars: `n - 1` when `k <= n`, else `n`;
/// * otherwise let x be the neighbour of a diameter endpoint, with leaf set L
///   of size l: `l <= k-3` gives `sn(T \ L) + l`; `l >= k-1` gives
///   `sn(T \ L) + l - 1`; `l = k-2` gives `sn(T \ L \ x) + l`, summing over
///   components if the deletion disconnects anything.
pub fn sn_tree(tree: &ColourStructure, k: u8) -> Result<usize> {
    if !tree.is_graph() {
        return Err(Error::input("sn_tree expects a graph"));
    }
    if k < 3 {
        return Err(Error::input(
            "sn_tree needs k >= 3 (a bipartite structure has sn = 1; use the general solver)",
        ));
    }
    let n = tree.n();
    if n == 0 || tree.edges().len() != n - 1 || !tree.is_connected() {
        return Err(Error::input("input is not a tree"));
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| tree.neighbours(v).to_vec()).collect();
    let alive = vec![true; n];
    Ok(solve_forest(&adj, &alive, k as usize))
}

/// Sum the recurrence over the components of the surviving forest.
fn solve_forest(adj: &[Vec<usize>], alive: &[bool], k: usize) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut total = 0;
    for start in 0..n {
        if !alive[start] || seen[start] {
            continue;
        }
        let mut component = vec![false; n];
        let mut stack = vec![start];
        seen[start] = true;
        component[start] = true;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if alive[u] && !seen[u] {
                    seen[u] = true;
                    component[u] = true;
                    stack.push(u);
                }
            }
        }
        total += solve_tree(adj, component, k);
    }
    total
}

fn solve_tree(adj: &[Vec<usize>], mut alive: Vec<bool>, k: usize) -> usize {
    let n = adj.len();
    let mut acc = 0;
    loop {
        let vertices: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let count = vertices.len();
        if count == 1 {
            // a lone vertex is never forced
            return acc + 1;
        }
        let deg = |v: usize| adj[v].iter().filter(|&&u| alive[u]).count();
        let internal = vertices.iter().filter(|&&v| deg(v) > 1).count();
        if internal <= 1 {
            // a star (includes the single edge)
            return acc + if k <= count { count - 1 } else { count };
        }

        let a = bfs_farthest(adj, &alive, vertices[0]);
        let b = bfs_farthest(adj, &alive, a);
        let endpoint = a.min(b);
        let x = *adj[endpoint]
            .iter()
            .find(|&&u| alive[u])
            .expect("diameter endpoint has a neighbour");
        let leaves: Vec<usize> = adj[x]
            .iter()
            .copied()
            .filter(|&u| alive[u] && deg(u) == 1)
            .collect();
        let l = leaves.len();
        debug_assert_eq!(deg(x), l + 1, "x has exactly one non-leaf neighbour");

        for &u in &leaves {
            alive[u] = false;
        }
        if l <= k - 3 {
            // leaves and x must all be precoloured; T \ L stays connected
            acc += l;
        } else if l >= k - 1 {
            acc += l - 1;
        } else {
            // l = k-2: delete x too and recurse over whatever remains
            alive[x] = false;
            return acc + l + solve_forest(adj, &alive, k);
        }
    }
}

/// Farthest alive vertex from `start`, ties broken by lowest index.
fn bfs_farthest(adj: &[Vec<usize>], alive: &[bool], start: usize) -> usize {
    let n = adj.len();
    let mut dist = vec![usize::MAX; n];
    dist[start] = 0;
    let mut queue = std::collections::VecDeque::from([start]);
    let mut best = start;
    while let Some(v) = queue.pop_front() {
        if dist[v] > dist[best] || (dist[v] == dist[best] && v < best) {
            best = v;
        }
        for &u in &adj[v] {
            if alive[u] && dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    best
}

/// Exact r-domination number: the smallest D such that every vertex outside D
/// has at least r neighbours in D, by increasing-size search.
pub fn r_domination(graph: &ColourStructure, r: usize) -> Result<usize> {
    if !graph.is_graph() {
        return Err(Error::input("r_domination expects a graph"));
    }
    if r < 1 {
        return Err(Error::input("r_domination needs r >= 1"));
    }
    let n = graph.n();
    if n == 0 {
        return Err(Error::input("r_domination needs at least one vertex"));
    }
    let all: Vec<usize> = (0..n).collect();
    for size in 0..=n {
        for d in Combinations::new(&all, size) {
            let mut in_d = vec![false; n];
            for &v in &d {
                in_d[v] = true;
            }
            let dominates = (0..n).all(|v| {
                in_d[v]
                    || graph
                        .neighbours(v)
                        .iter()
                        .filter(|&&u| in_d[u])
                        .count()
                        >= r
            });
            if dominates {
                return Ok(size);
            }
        }
    }
    unreachable!("the full vertex set always r-dominates");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, FamilySpec};

    #[test]
    fn star_base_case() {
        let star6 = generate(&FamilySpec::Star { n: 6 }).unwrap();
        assert_eq!(sn_tree(&star6, 3).unwrap(), 5);
        assert_eq!(sn_tree(&star6, 6).unwrap(), 5);
        assert_eq!(sn_tree(&star6, 7).unwrap(), 6);
    }

    #[test]
    fn paths_and_binary_trees() {
        let p5 = generate(&FamilySpec::Path { n: 5 }).unwrap();
        assert_eq!(sn_tree(&p5, 3).unwrap(), 3);

        let cbt2 = generate(&FamilySpec::CompleteBinaryTree { h: 2 }).unwrap();
        assert_eq!(sn_tree(&cbt2, 3).unwrap(), 4);
        let cbt3 = generate(&FamilySpec::CompleteBinaryTree { h: 3 }).unwrap();
        assert_eq!(sn_tree(&cbt3, 3).unwrap(), 8);
    }

    #[test]
    fn rejects_non_trees_and_small_k() {
        let c4 = generate(&FamilySpec::Cycle { n: 4 }).unwrap();
        assert!(sn_tree(&c4, 3).is_err());
        let p5 = generate(&FamilySpec::Path { n: 5 }).unwrap();
        assert!(sn_tree(&p5, 2).is_err());
    }

    #[test]
    fn domination_examples() {
        let p4 = generate(&FamilySpec::Path { n: 4 }).unwrap();
        assert_eq!(r_domination(&p4, 1).unwrap(), 2);

        let k13 = generate(&FamilySpec::Star { n: 4 }).unwrap();
        assert_eq!(r_domination(&k13, 2).unwrap(), 3);

        let cbt2 = generate(&FamilySpec::CompleteBinaryTree { h: 2 }).unwrap();
        assert_eq!(r_domination(&cbt2, 2).unwrap(), 5);
    }

    #[test]
    fn gamma_monotone_in_r() {
        let cbt2 = generate(&FamilySpec::CompleteBinaryTree { h: 2 }).unwrap();
        let g1 = r_domination(&cbt2, 1).unwrap();
        let g2 = r_domination(&cbt2, 2).unwrap();
        assert!(g1 <= g2);
    }
}
