//! Exact computation of the chromatic number, the per-colouring parameters
//! scs / lcs, the four aggregate parameters sn / oscs / ulcs / olcs, and the
//! independent chromatic vertex stability number.
//!
//! Aggregates quantify over proper k-colourings up to colour permutation;
//! [`enumerate_colourings`] yields one representative per permutation class
//! (colours appear in first-use order by increasing vertex index), which is
//! sound because determining sets, and hence scs and lcs, are invariant under
//! renaming colours.
//!
//! Parallel searches are deterministic: work is split into fixed chunks that
//! are either fully evaluated or never started, and reductions use the global
//! lexicographic order rather than arrival order.

use rayon::prelude::*;

use crate::combi::{merged, Combinations};
use crate::engine::{
    count_extensions_ctx, determining_unchecked, extensions_up_to, fixed_vertices_unchecked,
    Budget, SearchCtx,
};
use crate::error::{Error, Result};
use crate::model::{
    is_proper, ColourStructure, Colouring, ParamResult, PartialColouring, MAX_COLOURS,
};

const SUBSET_CHUNK: usize = 512;
const COLOURING_CHUNK: usize = 256;

/// Lazy stream of canonical proper k-colourings of a structure.
///
/// Exactly one representative per colour-permutation class is produced, in
/// lexicographic order of the colour vector; the stream is empty iff k is
/// below the (weak) chromatic number.
pub struct CanonicalColourings<'a> {
    structure: &'a ColourStructure,
    k: u8,
    assign: Vec<u8>,
    cursor: Vec<u8>,    // per-depth next colour to try
    max_before: Vec<u8>, // colours used before this depth
    depth: usize,
    state: StreamState,
    edges_by_max: Vec<Vec<usize>>,
}

enum StreamState {
    Fresh,
    AtLeaf,
    Done,
}

impl<'a> CanonicalColourings<'a> {
    fn new(structure: &'a ColourStructure, k: u8) -> Self {
        let n = structure.n();
        let mut edges_by_max = vec![Vec::new(); n];
        for (ei, e) in structure.edges().iter().enumerate() {
            edges_by_max[*e.last().unwrap()].push(ei);
        }
        CanonicalColourings {
            structure,
            k,
            assign: vec![0; n],
            cursor: vec![1; n + 1],
            max_before: vec![0; n + 1],
            depth: 0,
            state: StreamState::Fresh,
            edges_by_max,
        }
    }

    /// Would assigning colour `c` to the depth-`d` vertex complete a
    /// monochromatic edge? (All other members of such edges are < d, hence
    /// already assigned.)
    fn completes_mono(&self, d: usize, c: u8) -> bool {
        self.edges_by_max[d].iter().any(|&ei| {
            self.structure.edges()[ei]
                .iter()
                .all(|&u| u == d || self.assign[u] == c)
        })
    }

    fn descend(&mut self) -> Option<Colouring> {
        let n = self.structure.n();
        loop {
            if self.depth == n {
                self.state = StreamState::AtLeaf;
                return Some(
                    Colouring::new(self.assign.clone(), self.k).expect("stream state is valid"),
                );
            }
            let d = self.depth;
            let top = (self.max_before[d] + 1).min(self.k);
            let mut placed = false;
            let mut c = self.cursor[d];
            while c <= top {
                if !self.completes_mono(d, c) {
                    self.assign[d] = c;
                    self.cursor[d] = c + 1;
                    self.max_before[d + 1] = self.max_before[d].max(c);
                    self.depth += 1;
                    self.cursor[self.depth] = 1;
                    placed = true;
                    break;
                }
                c += 1;
            }
            if !placed {
                if d == 0 {
                    self.state = StreamState::Done;
                    return None;
                }
                self.depth -= 1;
                self.assign[self.depth] = 0;
            }
        }
    }
}

impl<'a> Iterator for CanonicalColourings<'a> {
    type Item = Colouring;

    fn next(&mut self) -> Option<Colouring> {
        match self.state {
            StreamState::Done => None,
            StreamState::Fresh => {
                self.state = StreamState::AtLeaf;
                if self.structure.n() == 0 {
                    self.state = StreamState::Done;
                    return Colouring::new(Vec::new(), self.k).ok();
                }
                self.descend()
            }
            StreamState::AtLeaf => {
                // retreat off the completed leaf, then resume
                self.depth -= 1;
                self.assign[self.depth] = 0;
                self.descend()
            }
        }
    }
}

/// Deterministic stream of canonical proper k-colourings.
pub fn enumerate_colourings(structure: &ColourStructure, k: u8) -> Result<CanonicalColourings<'_>> {
    if k == 0 || k > MAX_COLOURS {
        return Err(Error::input(format!("k must be in 1..={MAX_COLOURS}")));
    }
    Ok(CanonicalColourings::new(structure, k))
}

fn has_proper_colouring(structure: &ColourStructure, k: u8, ctx: &mut SearchCtx) -> Result<bool> {
    let empty = PartialColouring::empty(structure.n(), k)?;
    Ok(count_extensions_ctx(structure, &empty, 1, ctx)? == 1)
}

pub(crate) fn chromatic_number_ctx(structure: &ColourStructure, ctx: &mut SearchCtx) -> Result<u8> {
    if structure.n() == 0 {
        return Ok(0);
    }
    for k in 1..=MAX_COLOURS {
        if has_proper_colouring(structure, k, ctx)? {
            return Ok(k);
        }
    }
    Err(Error::input(format!(
        "structure needs more than {MAX_COLOURS} colours"
    )))
}

/// Least k admitting a proper (weak-proper) k-colouring.
pub fn chromatic_number(structure: &ColourStructure) -> Result<u8> {
    chromatic_number_ctx(structure, &mut SearchCtx::unlimited())
}

/// Chunked deterministic parallel search over `items`: chunks are evaluated in
/// order, each chunk fully; the hit with the lowest index inside the first
/// hitting chunk wins. Returns the hit and the summed node count of all work
/// actually performed (a deterministic quantity).
fn chunked_search<T, R, F, I>(
    items: &mut I,
    chunk_size: usize,
    budget: &Budget,
    eval: F,
) -> Result<(Option<R>, u64)>
where
    T: Send + Sync,
    R: Send,
    I: Iterator<Item = T>,
    F: Fn(&T, &mut SearchCtx) -> Result<Option<R>> + Sync,
{
    let mut nodes = 0u64;
    loop {
        budget.check()?;
        let chunk: Vec<T> = items.by_ref().take(chunk_size).collect();
        if chunk.is_empty() {
            return Ok((None, nodes));
        }
        let results: Vec<(Option<R>, u64)> = chunk
            .par_iter()
            .map(|item| {
                let mut ctx = SearchCtx::new(*budget);
                let r = eval(item, &mut ctx)?;
                Ok((r, ctx.nodes))
            })
            .collect::<Result<Vec<_>>>()?;
        for (r, n) in results {
            nodes += n;
            if let Some(hit) = r {
                return Ok((Some(hit), nodes));
            }
        }
    }
}

fn validate_per_colouring_input(
    structure: &ColourStructure,
    c: &Colouring,
    k: u8,
) -> Result<Colouring> {
    if !is_proper(structure, c)? {
        return Err(Error::input("colouring is not proper"));
    }
    let max_used = c.colours().iter().copied().max().unwrap_or(0);
    if k < max_used {
        return Err(Error::input(format!(
            "k = {k} is below the largest colour used ({max_used})"
        )));
    }
    if k > MAX_COLOURS {
        return Err(Error::input(format!("k must be at most {MAX_COLOURS}")));
    }
    c.with_k(k)
}

/// scs and lcs share this skeleton: determining sets are exactly the sets
/// `M ∪ T` with `T` a subset of the fixed vertices that happens to determine,
/// where M is the mandatory (non-fixed) complement.
fn scs_for(
    structure: &ColourStructure,
    c: &Colouring,
    ctx: &mut SearchCtx,
) -> Result<(usize, Vec<usize>)> {
    let fixed = fixed_vertices_unchecked(structure, c);
    let mut in_fixed = vec![false; structure.n()];
    for &v in &fixed {
        in_fixed[v] = true;
    }
    let mandatory: Vec<usize> = (0..structure.n()).filter(|&v| !in_fixed[v]).collect();
    for t_size in 0..=fixed.len() {
        for t in Combinations::new(&fixed, t_size) {
            let s = merged(&mandatory, &t);
            if determining_unchecked(structure, c, &s, ctx)? {
                return Ok((s.len(), s));
            }
        }
    }
    unreachable!("the full vertex set always determines");
}

fn lcs_for(
    structure: &ColourStructure,
    c: &Colouring,
    ctx: &mut SearchCtx,
) -> Result<(usize, Vec<usize>)> {
    let fixed = fixed_vertices_unchecked(structure, c);
    let mut in_fixed = vec![false; structure.n()];
    for &v in &fixed {
        in_fixed[v] = true;
    }
    let mandatory: Vec<usize> = (0..structure.n()).filter(|&v| !in_fixed[v]).collect();
    for t_size in (0..=fixed.len()).rev() {
        for t in Combinations::new(&fixed, t_size) {
            let s = merged(&mandatory, &t);
            if !determining_unchecked(structure, c, &s, ctx)? {
                continue;
            }
            // removals of mandatory vertices always break determination, so
            // minimality only needs checking against the fixed part
            let mut minimal = true;
            for skip in 0..t.len() {
                let reduced: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                if determining_unchecked(structure, c, &merged(&mandatory, &reduced), ctx)? {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                return Ok((s.len(), s));
            }
        }
    }
    unreachable!("some critical set always exists");
}

/// Size of a smallest critical set for `(structure, c)` under palette `[1..k]`,
/// with the lexicographically smallest optimal witness.
pub fn scs_budgeted(
    structure: &ColourStructure,
    c: &Colouring,
    k: u8,
    budget: &Budget,
) -> Result<ParamResult> {
    let ck = validate_per_colouring_input(structure, c, k)?;
    let mut ctx = SearchCtx::new(*budget);
    let (value, witness) = scs_for(structure, &ck, &mut ctx)?;
    Ok(ParamResult {
        value,
        witness_colouring: Some(ck),
        witness_set: Some(witness),
        nodes_explored: ctx.nodes,
    })
}

pub fn scs(structure: &ColourStructure, c: &Colouring, k: u8) -> Result<ParamResult> {
    scs_budgeted(structure, c, k, &Budget::NONE)
}

/// Size of a largest critical set for `(structure, c)` under palette `[1..k]`.
pub fn lcs_budgeted(
    structure: &ColourStructure,
    c: &Colouring,
    k: u8,
    budget: &Budget,
) -> Result<ParamResult> {
    let ck = validate_per_colouring_input(structure, c, k)?;
    let mut ctx = SearchCtx::new(*budget);
    let (value, witness) = lcs_for(structure, &ck, &mut ctx)?;
    Ok(ParamResult {
        value,
        witness_colouring: Some(ck),
        witness_set: Some(witness),
        nodes_explored: ctx.nodes,
    })
}

pub fn lcs(structure: &ColourStructure, c: &Colouring, k: u8) -> Result<ParamResult> {
    lcs_budgeted(structure, c, k, &Budget::NONE)
}

/// First canonical consistent assignment on `subset` whose extension is
/// unique, in assignment-lex order.
fn subset_first_unique(
    structure: &ColourStructure,
    k: u8,
    subset: &[usize],
    ctx: &mut SearchCtx,
) -> Result<Option<PartialColouring>> {
    fn creates_mono(structure: &ColourStructure, asg: &[u8], v: usize, c: u8) -> bool {
        structure.edges_of(v).iter().any(|&ei| {
            structure.edges()[ei]
                .iter()
                .all(|&u| u == v || asg[u] == c)
        })
    }

    fn rec(
        structure: &ColourStructure,
        k: u8,
        subset: &[usize],
        asg: &mut Vec<u8>,
        i: usize,
        max_used: u8,
        ctx: &mut SearchCtx,
    ) -> Result<Option<PartialColouring>> {
        if i == subset.len() {
            let cells: Vec<Option<u8>> = asg
                .iter()
                .map(|&c| if c == 0 { None } else { Some(c) })
                .collect();
            let partial = PartialColouring::from_options(&cells, k)?;
            if count_extensions_ctx(structure, &partial, 2, ctx)? == 1 {
                return Ok(Some(partial));
            }
            return Ok(None);
        }
        let v = subset[i];
        let top = (max_used + 1).min(k);
        for c in 1..=top {
            if creates_mono(structure, asg, v, c) {
                continue;
            }
            asg[v] = c;
            if let Some(hit) = rec(structure, k, subset, asg, i + 1, max_used.max(c), ctx)? {
                asg[v] = 0;
                return Ok(Some(hit));
            }
            asg[v] = 0;
        }
        Ok(None)
    }

    let mut asg = vec![0u8; structure.n()];
    rec(structure, k, subset, &mut asg, 0, 0, ctx)
}

/// The Sudoku number: minimum size of a partial colouring with a unique
/// proper k-extension. Witness is the first hit in (size, subset-lex,
/// assignment-lex) order; `witness_colouring` is its unique extension.
pub fn sn_budgeted(structure: &ColourStructure, k: u8, budget: &Budget) -> Result<ParamResult> {
    let mut ctx = SearchCtx::new(*budget);
    let chi = chromatic_number_ctx(structure, &mut ctx)?;
    if k < chi {
        return Err(Error::infeasible(format!(
            "k = {k} is below the chromatic number {chi}"
        )));
    }
    if k > MAX_COLOURS {
        return Err(Error::input(format!("k must be at most {MAX_COLOURS}")));
    }
    let n = structure.n();

    // Mandatory-vertex rule (graphs): a vertex of degree <= k-2 can be
    // recoloured in isolation under every completion, so it belongs to every
    // uniquely extendable precoloured set.
    let mandatory: Vec<usize> = if structure.is_graph() && k >= 2 {
        (0..n)
            .filter(|&v| structure.degree(v) + 2 <= k as usize)
            .collect()
    } else {
        Vec::new()
    };
    let mut is_mandatory = vec![false; n];
    for &v in &mandatory {
        is_mandatory[v] = true;
    }
    let optional: Vec<usize> = (0..n).filter(|&v| !is_mandatory[v]).collect();

    let comp = structure.component_ids();
    let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);

    // Lower-bound seeding: a set of size < chi-1 uses <= chi-2 colours when
    // k = chi, admitting a colour-class swap; any nonempty structure with
    // k >= 2 admits a palette permutation, so sn >= 1.
    let mut lo = 0usize;
    if k >= 2 && n >= 1 {
        lo = 1;
    }
    if k == chi {
        lo = lo.max((chi as usize).saturating_sub(1));
    }
    lo = lo.max(mandatory.len()).min(n);

    let mut nodes = ctx.nodes;
    for size in lo..=n {
        if size < mandatory.len() {
            continue;
        }
        let extra = size - mandatory.len();
        if extra > optional.len() {
            break;
        }
        let mut subsets = Combinations::new(&optional, extra).map(|t| merged(&mandatory, &t));
        let (hit, chunk_nodes) = chunked_search(
            &mut subsets,
            SUBSET_CHUNK,
            budget,
            |subset: &Vec<usize>, ctx| {
                // component rule: a constraint component untouched by the
                // precoloured set can always permute its own colours
                if k >= 2 && ncomp > 1 {
                    let mut touched = vec![false; ncomp];
                    for &v in subset {
                        touched[comp[v]] = true;
                    }
                    if !touched.iter().all(|&t| t) {
                        return Ok(None);
                    }
                }
                let partial = subset_first_unique(structure, k, subset, ctx)?;
                Ok(partial.map(|p| (subset.clone(), p)))
            },
        )?;
        nodes += chunk_nodes;
        if let Some((subset, partial)) = hit {
            let mut wctx = SearchCtx::new(*budget);
            let exts = extensions_up_to(structure, &partial, 2, &mut wctx)?;
            nodes += wctx.nodes;
            debug_assert_eq!(exts.len(), 1);
            return Ok(ParamResult {
                value: size,
                witness_colouring: exts.into_iter().next(),
                witness_set: Some(subset),
                nodes_explored: nodes,
            });
        }
    }
    // size = n always succeeds (any proper colouring restricted to V), so we
    // only get here for n = 0 with lo = 0 handled in the loop above.
    unreachable!("the full vertex set always yields a unique extension");
}

pub fn sn(structure: &ColourStructure, k: u8) -> Result<ParamResult> {
    sn_budgeted(structure, k, &Budget::NONE)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Aggregate {
    MaxScs, // oscs
    MinLcs, // ulcs
    MaxLcs, // olcs
}

fn aggregate_budgeted(
    structure: &ColourStructure,
    k: u8,
    which: Aggregate,
    budget: &Budget,
) -> Result<ParamResult> {
    let mut ctx = SearchCtx::new(*budget);
    let chi = chromatic_number_ctx(structure, &mut ctx)?;
    if k < chi {
        return Err(Error::infeasible(format!(
            "k = {k} is below the chromatic number {chi}"
        )));
    }
    let n = structure.n();
    let mut stream = enumerate_colourings(structure, k)?;
    let mut best: Option<(usize, Colouring, Vec<usize>)> = None;
    let mut nodes = ctx.nodes;
    loop {
        budget.check()?;
        let chunk: Vec<Colouring> = stream.by_ref().take(COLOURING_CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let results: Vec<(usize, Vec<usize>, u64)> = chunk
            .par_iter()
            .map(|c| {
                let mut ctx = SearchCtx::new(*budget);
                let (value, witness) = match which {
                    Aggregate::MaxScs => scs_for(structure, c, &mut ctx)?,
                    Aggregate::MinLcs | Aggregate::MaxLcs => lcs_for(structure, c, &mut ctx)?,
                };
                Ok((value, witness, ctx.nodes))
            })
            .collect::<Result<Vec<_>>>()?;
        for (i, (value, witness, node_count)) in results.into_iter().enumerate() {
            nodes += node_count;
            let improves = match (&best, which) {
                (None, _) => true,
                (Some((b, _, _)), Aggregate::MinLcs) => value < *b,
                (Some((b, _, _)), _) => value > *b,
            };
            if improves {
                best = Some((value, chunk[i].clone(), witness));
            }
        }
        // max-aggregates cannot exceed the order
        if which != Aggregate::MinLcs {
            if let Some((v, _, _)) = &best {
                if *v == n {
                    break;
                }
            }
        }
    }
    let (value, colouring, witness) =
        best.ok_or_else(|| Error::infeasible("no proper colouring exists"))?;
    Ok(ParamResult {
        value,
        witness_colouring: Some(colouring),
        witness_set: Some(witness),
        nodes_explored: nodes,
    })
}

/// Maximum over k-colourings of the smallest critical set.
pub fn oscs_budgeted(structure: &ColourStructure, k: u8, budget: &Budget) -> Result<ParamResult> {
    aggregate_budgeted(structure, k, Aggregate::MaxScs, budget)
}

pub fn oscs(structure: &ColourStructure, k: u8) -> Result<ParamResult> {
    oscs_budgeted(structure, k, &Budget::NONE)
}

/// Minimum over k-colourings of the largest critical set.
pub fn ulcs_budgeted(structure: &ColourStructure, k: u8, budget: &Budget) -> Result<ParamResult> {
    aggregate_budgeted(structure, k, Aggregate::MinLcs, budget)
}

pub fn ulcs(structure: &ColourStructure, k: u8) -> Result<ParamResult> {
    ulcs_budgeted(structure, k, &Budget::NONE)
}

/// Maximum over k-colourings of the largest critical set.
pub fn olcs_budgeted(structure: &ColourStructure, k: u8, budget: &Budget) -> Result<ParamResult> {
    aggregate_budgeted(structure, k, Aggregate::MaxLcs, budget)
}

pub fn olcs(structure: &ColourStructure, k: u8) -> Result<ParamResult> {
    olcs_budgeted(structure, k, &Budget::NONE)
}

/// Smallest independent set whose removal lowers the chromatic number.
pub fn ivs_chi(structure: &ColourStructure) -> Result<usize> {
    if !structure.is_graph() {
        return Err(Error::input("ivs_chi is defined for graphs"));
    }
    if structure.n() == 0 {
        return Err(Error::input("ivs_chi needs at least one vertex"));
    }
    let chi = chromatic_number(structure)?;
    let all: Vec<usize> = (0..structure.n()).collect();
    for size in 1..=structure.n() {
        for s in Combinations::new(&all, size) {
            let independent = s
                .iter()
                .enumerate()
                .all(|(i, &u)| s[i + 1..].iter().all(|&v| !structure.neighbours(u).contains(&v)));
            if !independent {
                continue;
            }
            let reduced = structure.delete_vertices(&s)?;
            if chromatic_number(&reduced)? < chi {
                return Ok(size);
            }
        }
    }
    unreachable!("removing a whole colour class lowers the chromatic number");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, FamilySpec};

    fn cycle(n: usize) -> ColourStructure {
        generate(&FamilySpec::Cycle { n }).unwrap()
    }

    fn complete(n: usize) -> ColourStructure {
        generate(&FamilySpec::Complete { n }).unwrap()
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&cycle(4)).unwrap(), 2);
        assert_eq!(chromatic_number(&cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&complete(5)).unwrap(), 5);
        let petersen = generate(&FamilySpec::Petersen).unwrap();
        assert_eq!(chromatic_number(&petersen).unwrap(), 3);
        let spindle = generate(&FamilySpec::MoserSpindle).unwrap();
        assert_eq!(chromatic_number(&spindle).unwrap(), 4);
        // complete tripartite: one colour per part
        let mut edges = Vec::new();
        for i in 0..9usize {
            for j in i + 1..9 {
                if i / 3 != j / 3 {
                    edges.push((i, j));
                }
            }
        }
        let k333 = ColourStructure::graph(9, &edges).unwrap();
        assert_eq!(chromatic_number(&k333).unwrap(), 3);
    }

    #[test]
    fn canonical_colouring_counts() {
        let k3 = complete(3);
        assert_eq!(enumerate_colourings(&k3, 3).unwrap().count(), 1);
        assert_eq!(enumerate_colourings(&cycle(4), 2).unwrap().count(), 1);
        // 30 proper 3-colourings of C5 / 3! permutations
        assert_eq!(enumerate_colourings(&cycle(5), 3).unwrap().count(), 5);
        // below chi the stream is empty
        assert_eq!(enumerate_colourings(&cycle(5), 2).unwrap().count(), 0);
    }

    #[test]
    fn canonical_representatives_use_first_appearance_order() {
        for c in enumerate_colourings(&cycle(5), 3).unwrap() {
            let mut seen_max = 0;
            for &col in c.colours() {
                assert!(col <= seen_max + 1, "not in first-use order: {c:?}");
                seen_max = seen_max.max(col);
            }
        }
    }

    #[test]
    fn scs_examples() {
        let k4 = complete(4);
        let c = Colouring::new(vec![1, 2, 3, 4], 4).unwrap();
        let r = scs(&k4, &c, 4).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.witness_set.unwrap(), vec![0, 1, 2]);

        let c4 = cycle(4);
        let two = Colouring::new(vec![1, 2, 1, 2], 2).unwrap();
        assert_eq!(scs(&c4, &two, 2).unwrap().value, 1);
    }

    #[test]
    fn scs_rejects_small_k() {
        let c4 = cycle(4);
        let two = Colouring::new(vec![1, 2, 1, 2], 2).unwrap();
        assert!(scs(&c4, &two, 1).is_err());
    }

    #[test]
    fn lcs_on_kn_and_odd_cycle() {
        let k4 = complete(4);
        let c = Colouring::new(vec![1, 2, 3, 4], 4).unwrap();
        assert_eq!(lcs(&k4, &c, 4).unwrap().value, 3);

        // colour 3 used once: the largest critical set misses only one vertex
        let c5 = cycle(5);
        let c = Colouring::new(vec![1, 2, 1, 2, 3], 3).unwrap();
        assert_eq!(lcs(&c5, &c, 3).unwrap().value, 4);
    }

    #[test]
    fn sn_small_values() {
        assert_eq!(sn(&cycle(4), 2).unwrap().value, 1);
        assert_eq!(sn(&complete(4), 4).unwrap().value, 3);
        assert_eq!(sn(&cycle(5), 3).unwrap().value, 3);
        assert_eq!(sn(&cycle(7), 3).unwrap().value, 4);
    }

    #[test]
    fn sn_witness_extends_uniquely() {
        let g = cycle(7);
        let r = sn(&g, 3).unwrap();
        let c = r.witness_colouring.unwrap();
        let s = r.witness_set.unwrap();
        assert_eq!(s.len(), r.value);
        assert!(crate::engine::is_determining(&g, &c, &s).unwrap());
    }

    #[test]
    fn sn_rejects_k_below_chi() {
        assert!(matches!(
            sn(&cycle(5), 2),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn aggregates_on_small_graphs() {
        // K5 at k=5: single colouring class, scs = lcs = 4
        let k5 = complete(5);
        assert_eq!(oscs(&k5, 5).unwrap().value, 4);
        assert_eq!(olcs(&k5, 5).unwrap().value, 4);
        assert_eq!(ulcs(&k5, 5).unwrap().value, 4);
        // one colour to spare: only V is critical
        assert_eq!(oscs(&k5, 6).unwrap().value, 5);
        assert_eq!(olcs(&k5, 6).unwrap().value, 5);
    }

    #[test]
    fn aggregate_witness_attains_value() {
        let c5 = cycle(5);
        let r = olcs(&c5, 3).unwrap();
        assert_eq!(r.value, 4);
        let c = r.witness_colouring.unwrap();
        let s = r.witness_set.unwrap();
        assert_eq!(s.len(), 4);
        assert!(crate::engine::is_critical(&c5, &c, &s).unwrap());
    }

    #[test]
    fn ivs_chi_examples() {
        assert_eq!(ivs_chi(&cycle(5)).unwrap(), 1);
        assert_eq!(ivs_chi(&complete(4)).unwrap(), 1);
        let spindle = generate(&FamilySpec::MoserSpindle).unwrap();
        assert_eq!(ivs_chi(&spindle).unwrap(), 1);
    }
}
