//! Data model: colour structures (graphs and hypergraphs), total and partial
//! colourings, and their validity predicates.
//!
//! Vertices are `0..n`. Colours are 1-based integers in `[1..k]`; a graph is
//! the special case of a structure whose constraint edges all have size 2, and
//! a colouring is valid when no constraint edge is monochromatic (for graphs
//! this is the usual properness, for hypergraphs it is weak properness).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Colours fit in a `u32` admissibility bitmask throughout the solvers.
pub const MAX_COLOURS: u8 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureKind {
    Graph,
    Hypergraph,
}

/// A vertex-coloured constraint structure: `n` vertices plus a family of
/// constraint edges, each a set of at least two distinct vertices.
///
/// Immutable after construction. Edges are stored sorted and deduplicated;
/// graphs additionally carry an adjacency view for O(1) neighbourhood scans.
#[derive(Debug, Clone)]
pub struct ColourStructure {
    n: usize,
    edges: Vec<Vec<usize>>,
    kind: StructureKind,
    adj: Vec<Vec<usize>>,          // neighbour lists; graphs only (empty otherwise)
    vertex_edges: Vec<Vec<usize>>, // indices of edges containing each vertex
    labels: Option<Vec<String>>,
}

impl PartialEq for ColourStructure {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.kind == other.kind && self.edges == other.edges
    }
}
impl Eq for ColourStructure {}

impl ColourStructure {
    /// Build a structure from raw edges, validating every invariant:
    /// vertices in range, edges of size >= 2 with distinct vertices, no
    /// duplicate edges.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if e.len() < 2 {
                return Err(Error::input(format!("edge {e:?} has size < 2")));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::input(format!("edge {e:?} repeats a vertex")));
            }
            if *e.last().unwrap() >= n {
                return Err(Error::input(format!(
                    "edge {e:?} mentions a vertex out of range 0..{n}"
                )));
            }
            normalized.push(e);
        }
        normalized.sort();
        if normalized.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("duplicate edge".to_string()));
        }
        let kind = if normalized.iter().all(|e| e.len() == 2) {
            StructureKind::Graph
        } else {
            StructureKind::Hypergraph
        };
        let mut adj = vec![Vec::new(); n];
        if kind == StructureKind::Graph {
            for e in &normalized {
                adj[e[0]].push(e[1]);
                adj[e[1]].push(e[0]);
            }
            for a in &mut adj {
                a.sort_unstable();
            }
        }
        let mut vertex_edges = vec![Vec::new(); n];
        for (i, e) in normalized.iter().enumerate() {
            for &v in e {
                vertex_edges[v].push(i);
            }
        }
        Ok(ColourStructure {
            n,
            edges: normalized,
            kind,
            adj,
            vertex_edges,
            labels: None,
        })
    }

    /// Graph constructor from a pair list.
    pub fn graph(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, pairs.iter().map(|&(a, b)| vec![a, b]).collect())
    }

    /// Attach human-readable vertex names (used by the bespoke paper graphs).
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::input("label count differs from vertex count"));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn kind(&self) -> StructureKind {
        self.kind
    }

    pub fn is_graph(&self) -> bool {
        self.kind == StructureKind::Graph
    }

    /// Neighbour list of `v`; meaningful for graphs only.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Indices into `edges()` of the edges containing `v`.
    pub fn edges_of(&self, v: usize) -> &[usize] {
        &self.vertex_edges[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(self.is_graph());
        self.adj[v].len()
    }

    /// Maximum degree (graphs).
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.adj[v].len()).max().unwrap_or(0)
    }

    /// Minimum degree (graphs).
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.adj[v].len()).min().unwrap_or(0)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Index of the vertex named `name`, if labels are attached.
    pub fn vertex_named(&self, name: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|ls| ls.iter().position(|l| l == name))
    }

    /// Component id per vertex of the constraint graph (vertices sharing any
    /// edge are connected).
    pub fn component_ids(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &ei in &self.vertex_edges[v] {
                    for &u in &self.edges[ei] {
                        if comp[u] == usize::MAX {
                            comp[u] = next;
                            stack.push(u);
                        }
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_ids().iter().all(|&c| c == 0)
    }

    /// Induced substructure on the vertices NOT in `removed`, relabelled to
    /// `0..m` in increasing original order. Edges that lose a vertex are
    /// dropped entirely (vertex deletion), edges shrinking below size 2 too.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<ColourStructure> {
        let mut keep = vec![true; self.n];
        for &v in removed {
            if v >= self.n {
                return Err(Error::input(format!("vertex {v} out of range")));
            }
            keep[v] = false;
        }
        let mut relabel = vec![usize::MAX; self.n];
        let mut m = 0;
        for v in 0..self.n {
            if keep[v] {
                relabel[v] = m;
                m += 1;
            }
        }
        let mut edges = Vec::new();
        for e in &self.edges {
            if e.iter().all(|&v| keep[v]) {
                edges.push(e.iter().map(|&v| relabel[v]).collect());
            }
        }
        ColourStructure::new(m, edges)
    }
}

/// A total colour assignment with palette `[1..k]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    colours: Vec<u8>,
    k: u8,
}

impl Colouring {
    pub fn new(colours: Vec<u8>, k: u8) -> Result<Self> {
        if k == 0 || k > MAX_COLOURS {
            return Err(Error::input(format!("k must be in 1..={MAX_COLOURS}")));
        }
        if let Some(&c) = colours.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::input(format!("colour {c} outside [1..{k}]")));
        }
        Ok(Colouring { colours, k })
    }

    pub fn colours(&self) -> &[u8] {
        &self.colours
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.colours[v]
    }

    /// Same assignment under a larger palette.
    pub fn with_k(&self, k: u8) -> Result<Colouring> {
        Colouring::new(self.colours.clone(), k)
    }

    /// Apply a colour permutation `perm` (`perm[c-1]` is the image of `c`).
    pub fn permute(&self, perm: &[u8]) -> Result<Colouring> {
        if perm.len() != self.k as usize {
            return Err(Error::input("permutation length differs from k"));
        }
        let colours = self
            .colours
            .iter()
            .map(|&c| perm[(c - 1) as usize])
            .collect();
        Colouring::new(colours, self.k)
    }
}

/// A per-vertex colour-or-unassigned map. The unassigned sentinel is private;
/// the API speaks `Option<u8>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialColouring {
    assignment: Vec<u8>, // 0 = unassigned, never exposed
    k: u8,
}

impl PartialColouring {
    pub fn empty(n: usize, k: u8) -> Result<Self> {
        if k == 0 || k > MAX_COLOURS {
            return Err(Error::input(format!("k must be in 1..={MAX_COLOURS}")));
        }
        Ok(PartialColouring {
            assignment: vec![0; n],
            k,
        })
    }

    pub fn from_options(cells: &[Option<u8>], k: u8) -> Result<Self> {
        let mut p = Self::empty(cells.len(), k)?;
        for (v, cell) in cells.iter().enumerate() {
            if let Some(c) = *cell {
                p.set(v, c)?;
            }
        }
        Ok(p)
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<u8> {
        match self.assignment[v] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn is_assigned(&self, v: usize) -> bool {
        self.assignment[v] != 0
    }

    pub fn set(&mut self, v: usize, colour: u8) -> Result<()> {
        if colour == 0 || colour > self.k {
            return Err(Error::input(format!(
                "colour {colour} outside [1..{}]",
                self.k
            )));
        }
        self.assignment[v] = colour;
        Ok(())
    }

    /// Vertices currently assigned, in increasing order.
    pub fn support(&self) -> Vec<usize> {
        (0..self.assignment.len())
            .filter(|&v| self.assignment[v] != 0)
            .collect()
    }

    pub fn assigned_count(&self) -> usize {
        self.assignment.iter().filter(|&&c| c != 0).count()
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(|&c| c != 0)
    }

    /// Convert to a total colouring; errors if any vertex is unassigned.
    pub fn to_colouring(&self) -> Result<Colouring> {
        if !self.is_total() {
            return Err(Error::input("partial colouring is not total"));
        }
        Colouring::new(self.assignment.clone(), self.k)
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.assignment
    }
}

/// True iff no constraint edge of `structure` is monochromatic under `c`
/// (proper colouring for graphs, weak-proper for hypergraphs).
pub fn is_proper(structure: &ColourStructure, c: &Colouring) -> Result<bool> {
    if c.len() != structure.n() {
        return Err(Error::input(format!(
            "colouring has length {}, structure has {} vertices",
            c.len(),
            structure.n()
        )));
    }
    Ok(structure.edges().iter().all(|e| {
        let first = c.get(e[0]);
        !e[1..].iter().all(|&v| c.get(v) == first)
    }))
}

/// Restriction `c|S`: agrees with `c` on `subset`, unassigned elsewhere.
pub fn restrict(c: &Colouring, subset: &[usize]) -> Result<PartialColouring> {
    let mut p = PartialColouring::empty(c.len(), c.k())?;
    for &v in subset {
        if v >= c.len() {
            return Err(Error::input(format!("vertex {v} out of range")));
        }
        p.set(v, c.get(v))?;
    }
    Ok(p)
}

/// Outcome of a parameter computation: the value, an optional witness
/// colouring and vertex set attaining it, and a node counter from the
/// underlying searches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamResult {
    pub value: usize,
    pub witness_colouring: Option<Colouring>,
    pub witness_set: Option<Vec<usize>>,
    pub nodes_explored: u64,
}
