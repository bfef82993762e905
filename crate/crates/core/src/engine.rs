//! The uniqueness oracle: forced-vertex propagation, capped extension
//! counting, and the determining / critical / fixed predicates.
//!
//! All searches share one propagation rule: an unassigned vertex loses colour
//! `a` as soon as some edge through it has exactly one hole left and all its
//! assigned vertices carry `a` (assigning `a` would make the edge
//! monochromatic). For graphs this is exactly "v sees that colour on an
//! assigned neighbour". A vertex reduced to a single admissible colour is
//! assigned; a vertex with none is a contradiction.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::model::{is_proper, restrict, ColourStructure, Colouring, PartialColouring, MAX_COLOURS};

/// Wall-clock limit for a solver call. `Budget::NONE` never expires.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub const NONE: Budget = Budget { deadline: None };

    pub fn from_duration(d: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + d),
        }
    }

    pub fn seconds(secs: f64) -> Self {
        Self::from_duration(Duration::from_secs_f64(secs))
    }

    fn expired(&self) -> bool {
        match self.deadline {
            Some(d) => Instant::now() > d,
            None => false,
        }
    }

    /// Error out if the deadline has passed.
    pub fn check(&self) -> Result<()> {
        if self.expired() {
            Err(Error::BudgetExhausted)
        } else {
            Ok(())
        }
    }
}

/// Per-call search state: node counter plus the budget it answers to.
#[derive(Debug)]
pub struct SearchCtx {
    pub nodes: u64,
    budget: Budget,
    tick: u32,
}

impl SearchCtx {
    pub fn new(budget: Budget) -> Self {
        SearchCtx {
            nodes: 0,
            budget,
            tick: 0,
        }
    }

    pub fn unlimited() -> Self {
        Self::new(Budget::NONE)
    }

    #[inline]
    fn enter_node(&mut self) -> Result<()> {
        self.nodes += 1;
        self.tick += 1;
        if self.tick >= 4096 {
            self.tick = 0;
            if self.budget.expired() {
                return Err(Error::BudgetExhausted);
            }
        }
        Ok(())
    }
}

/// Result of running propagation to its fixpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Propagated {
    /// Least fixpoint of the forcing rule (possibly total).
    Consistent(PartialColouring),
    /// Some unassigned vertex ended with no admissible colour.
    Contradiction,
}

const MIXED: u8 = u8::MAX;

/// Search state over a structure: assignment, admissibility masks and
/// per-edge hole counts. Cloned at branch points, mutated by propagation.
#[derive(Clone)]
struct Propagator<'a> {
    s: &'a ColourStructure,
    assign: Vec<u8>,
    adm: Vec<u32>,
    edge_unassigned: Vec<u32>,
    edge_colour: Vec<u8>, // 0 = nothing assigned yet, MIXED, or the uniform colour
    unassigned_left: usize,
    forced: Vec<usize>,
}

enum Fixpoint {
    Complete,
    Stable,
    Contradiction,
}

impl<'a> Propagator<'a> {
    /// Build the initial state, validating the partial against the structure.
    /// A fully assigned monochromatic edge is an input error (the partial
    /// violates its own invariant); a vertex with no admissible colour is a
    /// search-level contradiction and is left for `propagate` to report.
    fn new(s: &'a ColourStructure, partial: &PartialColouring) -> Result<Self> {
        if partial.len() != s.n() {
            return Err(Error::input(format!(
                "partial colouring has length {}, structure has {} vertices",
                partial.len(),
                s.n()
            )));
        }
        let k = partial.k();
        if k == 0 || k > MAX_COLOURS {
            return Err(Error::input(format!("k must be in 1..={MAX_COLOURS}")));
        }
        let full_mask = if u32::from(k) == 32 {
            u32::MAX
        } else {
            (1u32 << k) - 1
        };
        let assign: Vec<u8> = partial.raw().to_vec();
        let mut edge_unassigned = Vec::with_capacity(s.edges().len());
        let mut edge_colour = Vec::with_capacity(s.edges().len());
        for e in s.edges() {
            let mut holes = 0u32;
            let mut colour = 0u8;
            for &v in e {
                match assign[v] {
                    0 => holes += 1,
                    c if colour == 0 => colour = c,
                    c if c != colour => colour = MIXED,
                    _ => {}
                }
            }
            if holes == 0 && colour != MIXED {
                return Err(Error::input(
                    "inconsistent partial colouring: monochromatic edge".to_string(),
                ));
            }
            edge_unassigned.push(holes);
            edge_colour.push(colour);
        }
        let unassigned_left = assign.iter().filter(|&&c| c == 0).count();
        let mut p = Propagator {
            s,
            assign,
            adm: vec![full_mask; s.n()],
            edge_unassigned,
            edge_colour,
            unassigned_left,
            forced: Vec::new(),
        };
        for ei in 0..s.edges().len() {
            if p.edge_unassigned[ei] == 1 {
                let colour = p.edge_colour[ei];
                if colour != 0 && colour != MIXED {
                    let hole = p.hole_of(ei);
                    p.prune(hole, colour);
                }
            }
        }
        Ok(p)
    }

    fn hole_of(&self, ei: usize) -> usize {
        *self.s.edges()[ei]
            .iter()
            .find(|&&v| self.assign[v] == 0)
            .expect("edge recorded as having a hole")
    }

    /// Remove colour `c` from the admissible set of `v`; queue it when it
    /// becomes forced. A vertex at zero admissible colours is detected later.
    fn prune(&mut self, v: usize, c: u8) {
        let bit = 1u32 << (c - 1);
        if self.adm[v] & bit != 0 {
            self.adm[v] &= !bit;
            if self.adm[v].count_ones() == 1 {
                self.forced.push(v);
            }
        }
    }

    /// Assign `v := c`, updating edge states and admissibility. Returns false
    /// on an immediate contradiction.
    fn assign(&mut self, v: usize, c: u8) -> bool {
        debug_assert_eq!(self.assign[v], 0);
        debug_assert!(self.adm[v] & (1 << (c - 1)) != 0);
        self.assign[v] = c;
        self.unassigned_left -= 1;
        for i in 0..self.s.edges_of(v).len() {
            let ei = self.s.edges_of(v)[i];
            self.edge_unassigned[ei] -= 1;
            let ec = self.edge_colour[ei];
            let ec = if ec == 0 {
                c
            } else if ec != c {
                MIXED
            } else {
                ec
            };
            self.edge_colour[ei] = ec;
            if ec != MIXED {
                match self.edge_unassigned[ei] {
                    0 => return false, // edge went monochromatic
                    1 => {
                        let hole = self.hole_of(ei);
                        self.prune(hole, ec);
                        if self.adm[hole] == 0 {
                            return false;
                        }
                    }
                    _ => {}
                }
            }
        }
        true
    }

    /// Run the forcing rule to its fixpoint.
    fn propagate(&mut self) -> Fixpoint {
        while let Some(v) = self.forced.pop() {
            if self.assign[v] != 0 {
                continue;
            }
            let mask = self.adm[v];
            if mask == 0 {
                return Fixpoint::Contradiction;
            }
            if mask.count_ones() == 1 {
                let c = mask.trailing_zeros() as u8 + 1;
                if !self.assign(v, c) {
                    return Fixpoint::Contradiction;
                }
            }
        }
        if self.unassigned_left == 0 {
            Fixpoint::Complete
        } else {
            Fixpoint::Stable
        }
    }

    /// Fail-first branch choice: fewest admissible colours, lowest index.
    fn branch_vertex(&self) -> usize {
        let mut best = usize::MAX;
        let mut best_count = u32::MAX;
        for v in 0..self.s.n() {
            if self.assign[v] == 0 {
                let count = self.adm[v].count_ones();
                if count < best_count {
                    best_count = count;
                    best = v;
                }
            }
        }
        best
    }

    fn to_partial(&self, k: u8) -> PartialColouring {
        let cells: Vec<Option<u8>> = self
            .assign
            .iter()
            .map(|&c| if c == 0 { None } else { Some(c) })
            .collect();
        PartialColouring::from_options(&cells, k).expect("internal state is valid")
    }
}

/// Least fixpoint of the forcing rule, or a contradiction marker.
pub fn propagate_forced(
    structure: &ColourStructure,
    partial: &PartialColouring,
) -> Result<Propagated> {
    let mut p = Propagator::new(structure, partial)?;
    // Every queued vertex is checked again inside propagate; zero-admissible
    // vertices that never got queued surface here.
    for v in 0..structure.n() {
        if p.assign[v] == 0 && p.adm[v] == 0 {
            return Ok(Propagated::Contradiction);
        }
    }
    match p.propagate() {
        Fixpoint::Contradiction => Ok(Propagated::Contradiction),
        _ => Ok(Propagated::Consistent(p.to_partial(partial.k()))),
    }
}

fn count_rec(state: Propagator, cap: u64, ctx: &mut SearchCtx) -> Result<u64> {
    ctx.enter_node()?;
    let mut state = state;
    match state.propagate() {
        Fixpoint::Contradiction => Ok(0),
        Fixpoint::Complete => Ok(1),
        Fixpoint::Stable => {
            let v = state.branch_vertex();
            let mask = state.adm[v];
            let mut total = 0u64;
            let mut bits = mask;
            while bits != 0 {
                let c = bits.trailing_zeros() as u8 + 1;
                bits &= bits - 1;
                let mut child = state.clone();
                if child.assign(v, c) {
                    total += count_rec(child, cap - total, ctx)?;
                    if total >= cap {
                        return Ok(cap);
                    }
                }
            }
            Ok(total)
        }
    }
}

/// `min(cap, number of proper total colourings extending partial)`.
///
/// Deterministic; runs propagation at every node and branches fail-first when
/// it stalls. Never counts past `cap`.
pub fn count_extensions_ctx(
    structure: &ColourStructure,
    partial: &PartialColouring,
    cap: u64,
    ctx: &mut SearchCtx,
) -> Result<u64> {
    if cap == 0 {
        return Err(Error::input("cap must be at least 1"));
    }
    let p = Propagator::new(structure, partial)?;
    for v in 0..structure.n() {
        if p.assign[v] == 0 && p.adm[v] == 0 {
            return Ok(0);
        }
    }
    count_rec(p, cap, ctx)
}

pub fn count_extensions(
    structure: &ColourStructure,
    partial: &PartialColouring,
    cap: u64,
) -> Result<u64> {
    count_extensions_ctx(structure, partial, cap, &mut SearchCtx::unlimited())
}

fn collect_rec(
    state: Propagator,
    cap: usize,
    k: u8,
    out: &mut Vec<Colouring>,
    ctx: &mut SearchCtx,
) -> Result<()> {
    ctx.enter_node()?;
    let mut state = state;
    match state.propagate() {
        Fixpoint::Contradiction => Ok(()),
        Fixpoint::Complete => {
            out.push(Colouring::new(state.assign.clone(), k).expect("search state is valid"));
            Ok(())
        }
        Fixpoint::Stable => {
            let v = state.branch_vertex();
            let mut bits = state.adm[v];
            while bits != 0 && out.len() < cap {
                let c = bits.trailing_zeros() as u8 + 1;
                bits &= bits - 1;
                let mut child = state.clone();
                if child.assign(v, c) {
                    collect_rec(child, cap, k, out, ctx)?;
                }
            }
            Ok(())
        }
    }
}

/// The first `cap` proper total extensions of `partial`, in the deterministic
/// order the search discovers them.
pub fn extensions_up_to(
    structure: &ColourStructure,
    partial: &PartialColouring,
    cap: usize,
    ctx: &mut SearchCtx,
) -> Result<Vec<Colouring>> {
    if cap == 0 {
        return Err(Error::input("cap must be at least 1"));
    }
    let p = Propagator::new(structure, partial)?;
    for v in 0..structure.n() {
        if p.assign[v] == 0 && p.adm[v] == 0 {
            return Ok(Vec::new());
        }
    }
    let mut out = Vec::new();
    collect_rec(p, cap, partial.k(), &mut out, ctx)?;
    Ok(out)
}

/// Determining check without re-validating properness of `c`.
pub(crate) fn determining_unchecked(
    structure: &ColourStructure,
    c: &Colouring,
    subset: &[usize],
    ctx: &mut SearchCtx,
) -> Result<bool> {
    let partial = restrict(c, subset)?;
    Ok(count_extensions_ctx(structure, &partial, 2, ctx)? == 1)
}

/// True iff `c` is the unique proper extension of its restriction to `subset`.
pub fn is_determining(
    structure: &ColourStructure,
    c: &Colouring,
    subset: &[usize],
) -> Result<bool> {
    if !is_proper(structure, c)? {
        return Err(Error::input("colouring is not proper"));
    }
    determining_unchecked(structure, c, subset, &mut SearchCtx::unlimited())
}

/// True iff `subset` is a minimal determining set for `(structure, c)`.
/// Minimality needs only single-vertex removals because determining sets are
/// upward closed.
pub fn is_critical(structure: &ColourStructure, c: &Colouring, subset: &[usize]) -> Result<bool> {
    if !is_proper(structure, c)? {
        return Err(Error::input("colouring is not proper"));
    }
    let ctx = &mut SearchCtx::unlimited();
    if !determining_unchecked(structure, c, subset, ctx)? {
        return Ok(false);
    }
    let mut reduced = Vec::with_capacity(subset.len().saturating_sub(1));
    for skip in 0..subset.len() {
        reduced.clear();
        reduced.extend(subset.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
        if determining_unchecked(structure, c, &reduced, ctx)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn fixed_vertices_unchecked(structure: &ColourStructure, c: &Colouring) -> Vec<usize> {
    let k = c.k();
    (0..structure.n())
        .filter(|&v| {
            let original = c.get(v);
            // fixed iff every recolouring of v alone breaks some edge
            (1..=k).all(|a| {
                a == original
                    || structure.edges_of(v).iter().any(|&ei| {
                        structure.edges()[ei]
                            .iter()
                            .all(|&u| u == v || c.get(u) == a)
                    })
            })
        })
        .collect()
}

/// Vertices that cannot be recoloured in isolation. On graphs this is exactly
/// `{v : c(N[v]) = [k]}`; the single-recolouring form extends it to
/// hypergraphs.
pub fn fixed_vertices(structure: &ColourStructure, c: &Colouring) -> Result<Vec<usize>> {
    if !is_proper(structure, c)? {
        return Err(Error::input("colouring is not proper"));
    }
    Ok(fixed_vertices_unchecked(structure, c))
}

/// Complement of the fixed set: the vertices every determining set for
/// `(structure, c)` must contain (if v is not fixed, `V \ {v}` already fails
/// to determine, and so does any set avoiding v).
pub fn mandatory_vertices(structure: &ColourStructure, c: &Colouring) -> Result<Vec<usize>> {
    let fixed = fixed_vertices(structure, c)?;
    let mut is_fixed = vec![false; structure.n()];
    for &v in &fixed {
        is_fixed[v] = true;
    }
    Ok((0..structure.n()).filter(|&v| !is_fixed[v]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ColourStructure, Colouring, PartialColouring};

    fn k3() -> ColourStructure {
        ColourStructure::graph(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn c4() -> ColourStructure {
        ColourStructure::graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    fn partial(cells: &[Option<u8>], k: u8) -> PartialColouring {
        PartialColouring::from_options(cells, k).unwrap()
    }

    #[test]
    fn propagation_forces_last_colour_of_k3() {
        let p = partial(&[Some(1), Some(2), None], 3);
        match propagate_forced(&k3(), &p).unwrap() {
            Propagated::Consistent(q) => {
                assert_eq!(q.get(2), Some(3));
                assert!(q.is_total());
            }
            Propagated::Contradiction => panic!("expected fixpoint"),
        }
    }

    #[test]
    fn propagation_chains_through_even_cycle() {
        let p = partial(&[Some(1), None, None, None], 2);
        match propagate_forced(&c4(), &p).unwrap() {
            Propagated::Consistent(q) => {
                assert_eq!(
                    (0..4).map(|v| q.get(v).unwrap()).collect::<Vec<_>>(),
                    vec![1, 2, 1, 2]
                );
            }
            Propagated::Contradiction => panic!("expected fixpoint"),
        }
    }

    #[test]
    fn propagation_stalls_with_two_choices() {
        let path = ColourStructure::graph(3, &[(0, 1), (1, 2)]).unwrap();
        let p = partial(&[Some(1), None, None], 3);
        match propagate_forced(&path, &p).unwrap() {
            Propagated::Consistent(q) => {
                assert_eq!(q.get(1), None);
                assert_eq!(q.get(2), None);
            }
            Propagated::Contradiction => panic!("expected fixpoint"),
        }
    }

    #[test]
    fn propagation_reports_contradiction_as_value() {
        // star centre unassigned, leaves exhaust the palette
        let star = ColourStructure::graph(3, &[(0, 1), (0, 2)]).unwrap();
        let p = partial(&[None, Some(1), Some(2)], 2);
        assert_eq!(
            propagate_forced(&star, &p).unwrap(),
            Propagated::Contradiction
        );
    }

    #[test]
    fn inconsistent_partial_is_input_error() {
        let p = partial(&[Some(1), Some(1), None], 3);
        assert!(matches!(
            propagate_forced(&k3(), &p),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn count_extensions_on_even_cycle() {
        let empty = PartialColouring::empty(4, 2).unwrap();
        assert_eq!(count_extensions(&c4(), &empty, 4).unwrap(), 2);
        assert_eq!(count_extensions(&c4(), &empty, 1).unwrap(), 1);
    }

    #[test]
    fn count_extensions_forced_is_one() {
        let p = partial(&[Some(1), Some(2), None], 3);
        assert_eq!(count_extensions(&k3(), &p, 2).unwrap(), 1);
    }

    #[test]
    fn count_extensions_rejects_zero_cap() {
        let empty = PartialColouring::empty(4, 2).unwrap();
        assert!(count_extensions(&c4(), &empty, 0).is_err());
    }

    #[test]
    fn determining_full_and_empty() {
        let c = Colouring::new(vec![1, 2, 1, 2], 2).unwrap();
        assert!(is_determining(&c4(), &c, &[0, 1, 2, 3]).unwrap());
        // the empty set never determines C4 at k=2 (the swapped colouring agrees)
        assert!(!is_determining(&c4(), &c, &[]).unwrap());
        assert!(is_determining(&c4(), &c, &[0]).unwrap());
    }

    #[test]
    fn empty_set_never_determines_an_odd_cycle() {
        let c5 = ColourStructure::graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let c = Colouring::new(vec![1, 2, 1, 2, 3], 3).unwrap();
        // colour permutations always give other extensions
        assert!(!is_determining(&c5, &c, &[]).unwrap());
    }

    #[test]
    fn determining_rejects_improper() {
        let c = Colouring::new(vec![1, 1, 1, 1], 2).unwrap();
        assert!(matches!(
            is_determining(&c4(), &c, &[0]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn critical_on_k4() {
        let g = ColourStructure::graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        let c = Colouring::new(vec![1, 2, 3, 4], 4).unwrap();
        assert!(is_critical(&g, &c, &[0, 1, 2]).unwrap());
        // V is not minimal here: every vertex is fixed
        assert!(!is_critical(&g, &c, &[0, 1, 2, 3]).unwrap());
        assert!(!is_critical(&g, &c, &[0, 1]).unwrap());
    }

    #[test]
    fn fixed_vertices_examples() {
        let g = k3();
        let c = Colouring::new(vec![1, 2, 3], 3).unwrap();
        assert_eq!(fixed_vertices(&g, &c).unwrap(), vec![0, 1, 2]);

        let c4g = c4();
        let c = Colouring::new(vec![1, 2, 1, 2], 2).unwrap();
        assert_eq!(fixed_vertices(&c4g, &c).unwrap(), vec![0, 1, 2, 3]);

        // path: endpoints see one colour, k=3 leaves slack everywhere
        let path = ColourStructure::graph(3, &[(0, 1), (1, 2)]).unwrap();
        let c = Colouring::new(vec![1, 2, 1], 3).unwrap();
        assert!(fixed_vertices(&path, &c).unwrap().is_empty());
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        // a palette large enough to make full counting slow, with an
        // already-expired budget
        let g = crate::generators::generate(&crate::generators::FamilySpec::Complete { n: 9 })
            .unwrap();
        let empty = PartialColouring::empty(9, 9).unwrap();
        let budget = Budget::from_duration(Duration::from_secs(0));
        let mut ctx = SearchCtx::new(budget);
        std::thread::sleep(Duration::from_millis(5));
        let r = count_extensions_ctx(&g, &empty, u64::MAX, &mut ctx);
        assert!(matches!(r, Err(Error::BudgetExhausted)));
    }
}
