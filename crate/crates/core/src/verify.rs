//! Named, machine-checkable reproductions of the claims under test, plus
//! predicate scans over graph6 streams of small graphs.
//!
//! Reports are reproducible bit-for-bit across runs except for the recorded
//! runtime: the solvers are deterministic, scans reduce violations in record
//! order, and conjecture scans are labelled consistent-with rather than
//! verified.

use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combi::Combinations;
use crate::engine::{
    count_extensions, fixed_vertices, is_critical, is_determining, Budget,
};
use crate::error::{Error, Result};
use crate::generators::{generate, paper_colouring, FamilySpec};
use crate::io::parse_graph6;
use crate::model::{is_proper, restrict, ColourStructure, Colouring};
use crate::params::{
    chromatic_number, enumerate_colourings, ivs_chi, lcs_budgeted, olcs_budgeted, oscs_budgeted,
    scs_budgeted, sn_budgeted, ulcs_budgeted,
};
use crate::rng::SplitMix64;
use crate::tree::{r_domination, sn_tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// An established claim; the check reproduces it exactly.
    Verified,
    /// A finite scan of a conjecture: passing means "no counterexample seen".
    ConsistentWith,
}

/// Outcome of one named check or stream scan.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub citation: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub kind: CheckKind,
    pub runtime_secs: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub record_errors: Vec<String>,
}

impl CheckReport {
    /// Everything except the runtime, for reproducibility comparisons.
    pub fn stable_fields(&self) -> impl PartialEq + std::fmt::Debug + '_ {
        (
            &self.name,
            &self.expected,
            &self.computed,
            self.pass,
            self.kind,
            &self.violations,
            &self.notes,
            &self.record_errors,
        )
    }
}

struct CheckBody {
    expected: String,
    computed: String,
    pass: bool,
    kind: CheckKind,
    notes: Vec<String>,
}

impl CheckBody {
    fn compare<T: PartialEq + std::fmt::Debug>(expected: T, computed: T) -> Self {
        CheckBody {
            pass: expected == computed,
            expected: format!("{expected:?}"),
            computed: format!("{computed:?}"),
            kind: CheckKind::Verified,
            notes: Vec::new(),
        }
    }
}

fn structure(spec: FamilySpec) -> Result<ColourStructure> {
    generate(&spec)
}

fn rook33() -> Result<ColourStructure> {
    let k3 = FamilySpec::Complete { n: 3 };
    structure(FamilySpec::CartesianProduct(Box::new(k3.clone()), Box::new(k3)))
}

fn wheel(n: usize) -> Result<ColourStructure> {
    // hub 0 joined to a cycle on 1..n
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    for i in 1..n {
        edges.push((i, if i == n - 1 { 1 } else { i + 1 }));
    }
    ColourStructure::graph(n, &edges)
}

fn clique_with_pendant_path(k: usize, path: usize) -> Result<ColourStructure> {
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
        }
    }
    let mut prev = k - 1;
    for step in 0..path {
        edges.push((prev, k + step));
        prev = k + step;
    }
    ColourStructure::graph(k + path, &edges)
}

/// All named checks, in the order `verify --all` runs them.
pub fn all_checks() -> &'static [&'static str] {
    &[
        "sn-small-values",
        "k3k3-sn-table",
        "olcs-odd-cycles",
        "rho-ratio",
        "latin3-example",
        "ulcs-n1-families",
        "blowup-oscs",
        "tree-values",
        "moser-extension",
        "fig3-ulcs",
        "fig4-subgraph-sn",
        "sud2-fig2-critical",
        "latin4-eight-fixed",
        "fig5-construction",
        "sud3-fixed-audit",
        "latin-values",
        "sud2-values",
        "gk-monotonicity",
    ]
}

fn citation(name: &str) -> &'static str {
    match name {
        "sn-small-values" => "known values: sn(Petersen)=4, sn(C_{2n+1})=n+1, sn(K_2 x C_{2n+1})=n+1, bipartite sn=1, sn(K_n)=n-1",
        "k3k3-sn-table" => "worked example: sn(K_3 x K_3, k) = 2, 5, 7, 9 for k = 3, 4, 5, 6",
        "olcs-odd-cycles" => "odd cycles attain olcs = n-1",
        "rho-ratio" => "subgraph ratio: every parameter of K_{p,p,p} is 2 while sn(C_{3p}) = (3p+1)/2, at p=3",
        "latin3-example" => "3x3 grid hypergraph: the corner-block colouring attains the value 4",
        "ulcs-n1-families" => "families with ulcs = n-1: K_n minus C_5, C_5, the 6-wheel, a clique with a pendant path",
        "blowup-oscs" => "C_5 blow-ups have oscs = n-2 with clique number below chromatic number",
        "tree-values" => "trees: sn(T,3) = 2^h for complete binary trees, gamma_2 = floor(2^(h+2)/3), sn(T,1+r) <= gamma_r(T); star and path base cases",
        "moser-extension" => "every one-vertex extension of the Moser spindle has a determining set of size at most n-3",
        "fig3-ulcs" => "bowtie-on-K_{3,t} graph (t=4): ulcs(G,3) = t+2 = 6 while lcs at the given 4-colouring is 5, so ulcs(G,4) <= 5 < ulcs(G,3)",
        "fig4-subgraph-sn" => "K_{p,p} plus a triangle (p=5): sn(G) = ulcs(G) = p+1 = 6, while the subgraph H missing one edge has sn(H) = 3 and lcs(H,c) = 4",
        "sud2-fig2-critical" => "4x4 sudoku hypergraph: the 9 non-fixed cells of the given 2-colouring form a unique critical set",
        "latin4-eight-fixed" => "4x4 grid hypergraph: a colouring with 8 fixed vertices whose fixed-complement does not determine",
        "fig5-construction" => "9x9 sudoku hypergraph: the stair colouring is weak-proper with 3m(m-1) = 18 fixed cells; the 63 remaining cells form a critical set",
        "sud3-fixed-audit" => "no 2-colouring of the 9x9 sudoku hypergraph has more than 3m(m-1) = 18 fixed cells (randomized audit)",
        "latin-values" => "grid hypergraphs: sn = ulcs = (n-1)^2 for n >= 4, values 1 and 4 for n = 2, 3; oscs = olcs = n^2 for n >= 4 and 6 for n = 3",
        "sud2-values" => "4x4 sudoku hypergraph: sn = ulcs = 9, oscs = olcs = 16",
        "gk-monotonicity" => "K_{k,k} minus a perfect matching: sn(G_k,k-1) = 2k-5 and sn(G_k,k) = k, so sn is not monotone in k",
        _ => "",
    }
}

fn check_body(name: &str, budget: &Budget) -> Result<CheckBody> {
    match name {
        "sn-small-values" => {
            let mut expected = vec![
                ("petersen@3", 4usize),
                ("c7@3", 4),
                ("k2xc5@3", 3),
                ("c4@2", 1),
            ];
            let mut computed = vec![
                (
                    "petersen@3",
                    sn_budgeted(&structure(FamilySpec::Petersen)?, 3, budget)?.value,
                ),
                (
                    "c7@3",
                    sn_budgeted(&structure(FamilySpec::Cycle { n: 7 })?, 3, budget)?.value,
                ),
                (
                    "k2xc5@3",
                    sn_budgeted(
                        &structure(FamilySpec::CartesianProduct(
                            Box::new(FamilySpec::Complete { n: 2 }),
                            Box::new(FamilySpec::Cycle { n: 5 }),
                        ))?,
                        3,
                        budget,
                    )?
                    .value,
                ),
                (
                    "c4@2",
                    sn_budgeted(&structure(FamilySpec::Cycle { n: 4 })?, 2, budget)?.value,
                ),
            ];
            for n in 2..=6usize {
                expected.push(("kn@n", n - 1));
                computed.push((
                    "kn@n",
                    sn_budgeted(&structure(FamilySpec::Complete { n })?, n as u8, budget)?.value,
                ));
            }
            Ok(CheckBody::compare(expected, computed))
        }
        "k3k3-sn-table" => {
            let rook = rook33()?;
            let computed: Vec<usize> = (3..=6)
                .map(|k| Ok(sn_budgeted(&rook, k, budget)?.value))
                .collect::<Result<_>>()?;
            Ok(CheckBody::compare(vec![2, 5, 7, 9], computed))
        }
        "olcs-odd-cycles" => {
            let computed = (
                olcs_budgeted(&structure(FamilySpec::Cycle { n: 5 })?, 3, budget)?.value,
                olcs_budgeted(&structure(FamilySpec::Cycle { n: 7 })?, 3, budget)?.value,
            );
            Ok(CheckBody::compare((4, 6), computed))
        }
        "rho-ratio" => {
            // K_{3,3,3}: all four parameters are 2
            let k333 = {
                let parts: [Vec<usize>; 3] =
                    [(0..3).collect(), (3..6).collect(), (6..9).collect()];
                let mut edges = Vec::new();
                for i in 0..3 {
                    for j in i + 1..3 {
                        for &u in &parts[i] {
                            for &v in &parts[j] {
                                edges.push((u, v));
                            }
                        }
                    }
                }
                ColourStructure::graph(9, &edges)?
            };
            let c9 = structure(FamilySpec::Cycle { n: 9 })?;
            let params_of = |g: &ColourStructure| -> Result<[usize; 4]> {
                Ok([
                    sn_budgeted(g, 3, budget)?.value,
                    oscs_budgeted(g, 3, budget)?.value,
                    ulcs_budgeted(g, 3, budget)?.value,
                    olcs_budgeted(g, 3, budget)?.value,
                ])
            };
            let k333_params = params_of(&k333)?;
            let c9_params = params_of(&c9)?;
            let ratio_holds = c9_params
                .iter()
                .zip(k333_params.iter())
                .all(|(h, g)| *h > 2 * *g);
            let mut body = CheckBody::compare(
                ([2usize; 4], 5usize, true),
                (k333_params, c9_params[0], ratio_holds),
            );
            body.notes.push(format!("c9 params (sn,oscs,ulcs,olcs) = {c9_params:?}"));
            Ok(body)
        }
        "latin3-example" => {
            let pc = paper_colouring("fig2-latin3")?;
            let r = scs_budgeted(&pc.structure, &pc.colouring, 2, budget)?;
            Ok(CheckBody::compare(4, r.value))
        }
        "ulcs-n1-families" => {
            let cases: Vec<(&str, ColourStructure, u8, usize)> = vec![
                ("k6-c5", structure(FamilySpec::KnMinusC5 { n: 6 })?, 4, 5),
                ("k7-c5", structure(FamilySpec::KnMinusC5 { n: 7 })?, 5, 6),
                ("w6", wheel(6)?, 4, 5),
                ("k3+p1", clique_with_pendant_path(3, 1)?, 3, 3),
                ("k4+p2", clique_with_pendant_path(4, 2)?, 4, 5),
                ("c5", structure(FamilySpec::Cycle { n: 5 })?, 3, 4),
            ];
            let mut expected = Vec::new();
            let mut computed = Vec::new();
            for (label, g, k, want) in &cases {
                expected.push((*label, *want));
                computed.push((*label, ulcs_budgeted(g, *k, budget)?.value));
            }
            Ok(CheckBody::compare(expected, computed))
        }
        "blowup-oscs" => {
            let mut expected = Vec::new();
            let mut computed = Vec::new();
            for (p, q) in [(1usize, 1usize), (2, 1), (1, 2), (2, 2), (3, 1)] {
                let g = structure(FamilySpec::BlowupC5 { p, q })?;
                let n = g.n();
                let chi = (p + q + 1) as u8;
                expected.push(((p, q), n - 2));
                computed.push(((p, q), oscs_budgeted(&g, chi, budget)?.value));
            }
            Ok(CheckBody::compare(expected, computed))
        }
        "tree-values" => {
            let cbt2 = structure(FamilySpec::CompleteBinaryTree { h: 2 })?;
            let cbt3 = structure(FamilySpec::CompleteBinaryTree { h: 3 })?;
            let star6 = structure(FamilySpec::Star { n: 6 })?;
            let p5 = structure(FamilySpec::Path { n: 5 })?;
            let computed = (
                sn_tree(&cbt2, 3)?,
                sn_tree(&cbt3, 3)?,
                r_domination(&cbt2, 2)?,
                r_domination(&cbt3, 2)?,
                sn_tree(&star6, 3)?,
                sn_tree(&p5, 3)?,
            );
            let mut body = CheckBody::compare((4, 8, 5, 10, 5, 3), computed);
            let bound = sn_tree(&cbt2, 3)? <= r_domination(&cbt2, 2)?
                && sn_tree(&cbt3, 3)? <= r_domination(&cbt3, 2)?;
            body.pass &= bound;
            body.notes
                .push(format!("sn(T,3) <= gamma_2(T) on both binary trees: {bound}"));
            Ok(body)
        }
        "moser-extension" => {
            let spindle = structure(FamilySpec::MoserSpindle)?;
            let mut violations = Vec::new();
            let mut tested = 0;
            let mut attachments: Vec<Vec<usize>> = (0..7).map(|v| vec![v]).collect();
            for i in 0..7 {
                for j in i + 1..7 {
                    attachments.push(vec![i, j]);
                }
            }
            for attach in &attachments {
                let mut edges: Vec<(usize, usize)> = spindle
                    .edges()
                    .iter()
                    .map(|e| (e[0], e[1]))
                    .collect();
                for &v in attach {
                    edges.push((v, 7));
                }
                let g = ColourStructure::graph(8, &edges)?;
                let chi = chromatic_number(&g)?;
                let value = sn_budgeted(&g, chi, budget)?.value;
                tested += 1;
                if chi != 4 || value > 5 {
                    violations.push(format!("attachment {attach:?}: chi={chi} sn={value}"));
                }
            }
            let mut body = CheckBody::compare(Vec::<String>::new(), violations);
            body.notes.push(format!("{tested} extensions tested"));
            Ok(body)
        }
        "fig3-ulcs" => {
            let g = structure(FamilySpec::Fig3 { t: 4 })?;
            let pc = paper_colouring("fig3-colouring(4)")?;
            let ulcs3 = ulcs_budgeted(&g, 3, budget)?.value;
            let lcs4 = lcs_budgeted(&g, &pc.colouring, 4, budget)?.value;
            let ulcs4 = ulcs_budgeted(&g, 4, budget)?.value;
            let mut body = CheckBody::compare((6, 5, true), (ulcs3, lcs4, ulcs4 < ulcs3));
            // only the upper bound 5 is established for four colours; the
            // computed value is reported as a note, not asserted
            body.notes.push(format!("computed ulcs(G,4) = {ulcs4}"));
            body.pass &= ulcs4 <= 5;
            Ok(body)
        }
        "fig4-subgraph-sn" => {
            let g = structure(FamilySpec::Fig4 { p: 5 })?;
            let h = structure(FamilySpec::Fig4Subgraph { p: 5 })?;
            let pc = paper_colouring("fig4-h-colouring(5)")?;
            let computed = (
                sn_budgeted(&h, 3, budget)?.value,
                lcs_budgeted(&h, &pc.colouring, 3, budget)?.value,
                sn_budgeted(&g, 3, budget)?.value,
                ulcs_budgeted(&g, 3, budget)?.value,
            );
            Ok(CheckBody::compare((3, 4, 6, 6), computed))
        }
        "sud2-fig2-critical" => {
            let pc = paper_colouring("fig2-sud2")?;
            let fixed = fixed_vertices(&pc.structure, &pc.colouring)?;
            let mut in_fixed = vec![false; pc.structure.n()];
            for &v in &fixed {
                in_fixed[v] = true;
            }
            let black: Vec<usize> = (0..pc.structure.n()).filter(|&v| !in_fixed[v]).collect();
            let partial = restrict(&pc.colouring, &black)?;
            let extensions = count_extensions(&pc.structure, &partial, 2)?;
            let critical = is_critical(&pc.structure, &pc.colouring, &black)?;
            let scs_value = scs_budgeted(&pc.structure, &pc.colouring, 2, budget)?.value;
            Ok(CheckBody::compare(
                (7usize, 1u64, true, 9usize),
                (fixed.len(), extensions, critical, scs_value),
            ))
        }
        "latin4-eight-fixed" => {
            let pc = paper_colouring("fig2-k4k4")?;
            let fixed = fixed_vertices(&pc.structure, &pc.colouring)?;
            let mut in_fixed = vec![false; pc.structure.n()];
            for &v in &fixed {
                in_fixed[v] = true;
            }
            let complement: Vec<usize> =
                (0..pc.structure.n()).filter(|&v| !in_fixed[v]).collect();
            let determines = is_determining(&pc.structure, &pc.colouring, &complement)?;
            Ok(CheckBody::compare((8usize, false), (fixed.len(), determines)))
        }
        "fig5-construction" => {
            let pc = paper_colouring("fig5-sud3")?;
            let proper = is_proper(&pc.structure, &pc.colouring)?;
            let fixed = fixed_vertices(&pc.structure, &pc.colouring)?;
            let mut in_fixed = vec![false; pc.structure.n()];
            for &v in &fixed {
                in_fixed[v] = true;
            }
            let complement: Vec<usize> =
                (0..pc.structure.n()).filter(|&v| !in_fixed[v]).collect();
            let unique = count_extensions(&pc.structure, &restrict(&pc.colouring, &complement)?, 2)?;
            let critical = is_critical(&pc.structure, &pc.colouring, &complement)?;
            let stair4 = paper_colouring("sud-stair(4)")?;
            let stair4_fixed = fixed_vertices(&stair4.structure, &stair4.colouring)?.len();
            let mut body = CheckBody::compare(
                (true, 18usize, 63usize, 1u64, true, 36usize),
                (
                    proper,
                    fixed.len(),
                    complement.len(),
                    unique,
                    critical,
                    stair4_fixed,
                ),
            );
            if let Some(variant) = &pc.variant {
                body.notes.push(format!("accepted orientation: {variant}"));
            }
            Ok(body)
        }
        "sud3-fixed-audit" => {
            let sud3 = structure(FamilySpec::SudokuHypergraph { m: 3 })?;
            const SAMPLES: u64 = 100_000;
            const SEED: u64 = 0x5eed_0001;
            let max_fixed = (0..SAMPLES)
                .into_par_iter()
                .map(|i| {
                    let mut rng = SplitMix64::new(SEED ^ (i.wrapping_mul(0x9e37_79b9)));
                    let colouring = loop {
                        let colours: Vec<u8> =
                            (0..81).map(|_| if rng.flip() { 2 } else { 1 }).collect();
                        let c = Colouring::new(colours, 2).expect("colours in range");
                        if is_proper(&sud3, &c).expect("validated input") {
                            break c;
                        }
                    };
                    crate::engine::fixed_vertices_unchecked(&sud3, &colouring).len()
                })
                .max()
                .unwrap_or(0);
            let mut body = CheckBody::compare(true, max_fixed <= 18);
            body.notes
                .push(format!("max fixed over {SAMPLES} samples: {max_fixed}"));
            Ok(body)
        }
        "latin-values" => {
            let l2 = structure(FamilySpec::LatinHypergraph { n: 2 })?;
            let l3 = structure(FamilySpec::LatinHypergraph { n: 3 })?;
            let l4 = structure(FamilySpec::LatinHypergraph { n: 4 })?;
            let computed = (
                sn_budgeted(&l2, 2, budget)?.value,
                sn_budgeted(&l3, 2, budget)?.value,
                sn_budgeted(&l4, 2, budget)?.value,
                ulcs_budgeted(&l2, 2, budget)?.value,
                ulcs_budgeted(&l3, 2, budget)?.value,
                ulcs_budgeted(&l4, 2, budget)?.value,
                oscs_budgeted(&l3, 2, budget)?.value,
                olcs_budgeted(&l3, 2, budget)?.value,
                oscs_budgeted(&l4, 2, budget)?.value,
                olcs_budgeted(&l4, 2, budget)?.value,
            );
            Ok(CheckBody::compare((1, 4, 9, 1, 4, 9, 6, 6, 16, 16), computed))
        }
        "sud2-values" => {
            let sud2 = structure(FamilySpec::SudokuHypergraph { m: 2 })?;
            let computed = (
                sn_budgeted(&sud2, 2, budget)?.value,
                ulcs_budgeted(&sud2, 2, budget)?.value,
                oscs_budgeted(&sud2, 2, budget)?.value,
                olcs_budgeted(&sud2, 2, budget)?.value,
            );
            Ok(CheckBody::compare((9, 9, 16, 16), computed))
        }
        "gk-monotonicity" => {
            let mut expected = Vec::new();
            let mut computed = Vec::new();
            for k in 4..=6usize {
                let g = structure(FamilySpec::KkkMinusMatching { k })?;
                expected.push((k, 2 * k - 5, k));
                computed.push((
                    k,
                    sn_budgeted(&g, k as u8 - 1, budget)?.value,
                    sn_budgeted(&g, k as u8, budget)?.value,
                ));
            }
            let mut body = CheckBody::compare(expected, computed.clone());
            let drop_at_6 = computed
                .iter()
                .find(|(k, _, _)| *k == 6)
                .map(|&(_, at5, at6)| at6 < at5)
                .unwrap_or(false);
            body.pass &= drop_at_6;
            body.notes
                .push(format!("sn(G_6,6) < sn(G_6,5) holds: {drop_at_6}"));
            Ok(body)
        }
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

/// Run one named check under `budget`.
pub fn run_check(name: &str, budget: &Budget) -> Result<CheckReport> {
    let start = Instant::now();
    let body = check_body(name, budget)?;
    Ok(CheckReport {
        name: name.to_string(),
        citation: citation(name).to_string(),
        expected: body.expected,
        computed: body.computed,
        pass: body.pass,
        kind: body.kind,
        runtime_secs: start.elapsed().as_secs_f64(),
        violations: Vec::new(),
        notes: body.notes,
        record_errors: Vec::new(),
    })
}

// ---------------------------------------------------------------------------
// stream scans

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KPolicy {
    Chi,
    ChiPlusOne,
}

impl KPolicy {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "chi" => Ok(KPolicy::Chi),
            "chi+1" => Ok(KPolicy::ChiPlusOne),
            other => Err(Error::input(format!("unknown k policy: {other}"))),
        }
    }
}

pub fn all_predicates() -> &'static [&'static str] {
    &[
        "thm-sn-n-1",
        "thm-olcs-n-1",
        "thm-sn-n",
        "thm-overline-n",
        "conjecture-n2",
        "lemma-ivs",
        "two-colourings-prop",
        "oscs-subgraph-monotone",
        "conj2-olcs-subgraph",
    ]
}

fn predicate_kind(predicate: &str) -> CheckKind {
    match predicate {
        "conjecture-n2" | "conj2-olcs-subgraph" => CheckKind::ConsistentWith,
        _ => CheckKind::Verified,
    }
}

fn predicate_citation(predicate: &str) -> &'static str {
    match predicate {
        "thm-sn-n-1" => "sn(G) = n-1 iff G is complete, and the same for oscs",
        "thm-olcs-n-1" => "olcs(G) = n-1 iff some vertex v has chi(G-v) = chi(G)-1 = deg(v)",
        "thm-sn-n" => "sn(G,k) = n iff k > max degree + 1, and the same for ulcs",
        "thm-overline-n" => "oscs(G,k) = n iff k > chi, and the same for olcs",
        "conjecture-n2" => "conjecture: C_5 and the Moser spindle are the only imperfect graphs with sn = n-2",
        "lemma-ivs" => "sn(G) = n-2 implies the independent chromatic vertex stability number is 1",
        "two-colourings-prop" => "a graph colourable in exactly two ways has a critical set of size chi",
        "oscs-subgraph-monotone" => "oscs(H) >= oscs(G) for subgraphs H of G with the same chromatic number",
        "conj2-olcs-subgraph" => "conjecture: olcs(H) >= olcs(G) for subgraphs H of G with the same chromatic number",
        _ => "",
    }
}

enum Verdict {
    Pass,
    Note(String),
    Violation(String),
}

fn is_complete(g: &ColourStructure) -> bool {
    g.edges().len() == g.n() * g.n().saturating_sub(1) / 2
}

fn clique_number(g: &ColourStructure) -> usize {
    let all: Vec<usize> = (0..g.n()).collect();
    for size in (1..=g.n()).rev() {
        for s in Combinations::new(&all, size) {
            let clique = s
                .iter()
                .enumerate()
                .all(|(i, &u)| s[i + 1..].iter().all(|&v| g.neighbours(u).contains(&v)));
            if clique {
                return size;
            }
        }
    }
    0
}

/// Brute-force canonical form for isomorphism tests on tiny graphs: the
/// minimum upper-triangle bitmask over all vertex permutations.
fn canonical_form(g: &ColourStructure) -> u64 {
    let n = g.n();
    assert!(n <= 8, "canonical_form is for tiny graphs");
    let mut adj = vec![false; n * n];
    for e in g.edges() {
        adj[e[0] * n + e[1]] = true;
        adj[e[1] * n + e[0]] = true;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    let mut stack = vec![0usize; n];
    let encode = |perm: &[usize]| {
        let mut bits = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                bits <<= 1;
                if adj[perm[i] * n + perm[j]] {
                    bits |= 1;
                }
            }
        }
        bits
    };
    best = best.min(encode(&perm));
    // Heap's algorithm
    let mut i = 0;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            best = best.min(encode(&perm));
            stack[i] += 1;
            i = 0;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    best
}

fn isomorphic(a: &ColourStructure, b: &ColourStructure) -> bool {
    a.n() == b.n() && a.edges().len() == b.edges().len() && canonical_form(a) == canonical_form(b)
}

fn policy_k(chi: u8, policy: KPolicy) -> u8 {
    match policy {
        KPolicy::Chi => chi,
        KPolicy::ChiPlusOne => chi + 1,
    }
}

fn eval_predicate(
    predicate: &str,
    g: &ColourStructure,
    record: &str,
    policy: KPolicy,
    budget: &Budget,
) -> Result<Verdict> {
    let n = g.n();
    match predicate {
        "thm-sn-n-1" => {
            let chi = chromatic_number(g)?;
            let k = policy_k(chi, policy);
            let sn_value = sn_budgeted(g, k, budget)?.value;
            let oscs_value = oscs_budgeted(g, k, budget)?.value;
            let complete = is_complete(g) && policy == KPolicy::Chi;
            if (sn_value == n - 1) != complete {
                return Ok(Verdict::Violation(format!(
                    "{record}: sn={sn_value} n={n} complete={complete}"
                )));
            }
            if (oscs_value == n - 1) != complete {
                return Ok(Verdict::Violation(format!(
                    "{record}: oscs={oscs_value} n={n} complete={complete}"
                )));
            }
            Ok(Verdict::Pass)
        }
        "thm-olcs-n-1" => {
            let chi = chromatic_number(g)?;
            let olcs_value = olcs_budgeted(g, chi, budget)?.value;
            let witness = (0..n).any(|v| {
                g.degree(v) + 1 == chi as usize && {
                    let reduced = g.delete_vertices(&[v]).expect("vertex in range");
                    chromatic_number(&reduced).map(|c| c + 1 == chi).unwrap_or(false)
                }
            });
            if (olcs_value == n - 1) != witness {
                return Ok(Verdict::Violation(format!(
                    "{record}: olcs={olcs_value} n={n} witness={witness}"
                )));
            }
            Ok(Verdict::Pass)
        }
        "thm-sn-n" => {
            let chi = chromatic_number(g)?;
            let delta = g.max_degree() as u8;
            for k in chi..=delta + 2 {
                let expect_full = k > delta + 1;
                let sn_value = sn_budgeted(g, k, budget)?.value;
                if (sn_value == n) != expect_full {
                    return Ok(Verdict::Violation(format!(
                        "{record}: k={k} sn={sn_value} delta={delta}"
                    )));
                }
                let ulcs_value = ulcs_budgeted(g, k, budget)?.value;
                if (ulcs_value == n) != expect_full {
                    return Ok(Verdict::Violation(format!(
                        "{record}: k={k} ulcs={ulcs_value} delta={delta}"
                    )));
                }
            }
            Ok(Verdict::Pass)
        }
        "thm-overline-n" => {
            let chi = chromatic_number(g)?;
            let delta = g.max_degree() as u8;
            for k in chi..=(delta + 2).max(chi + 1) {
                let expect_full = k > chi;
                let oscs_value = oscs_budgeted(g, k, budget)?.value;
                if (oscs_value == n) != expect_full {
                    return Ok(Verdict::Violation(format!(
                        "{record}: k={k} oscs={oscs_value} chi={chi}"
                    )));
                }
                let olcs_value = olcs_budgeted(g, k, budget)?.value;
                if (olcs_value == n) != expect_full {
                    return Ok(Verdict::Violation(format!(
                        "{record}: k={k} olcs={olcs_value} chi={chi}"
                    )));
                }
            }
            Ok(Verdict::Pass)
        }
        "conjecture-n2" => {
            let chi = chromatic_number(g)?;
            if n < 2 {
                return Ok(Verdict::Pass);
            }
            if clique_number(g) >= chi as usize {
                return Ok(Verdict::Pass);
            }
            let sn_value = sn_budgeted(g, chi, budget)?.value;
            if sn_value != n - 2 {
                return Ok(Verdict::Pass);
            }
            let c5 = generate(&FamilySpec::Cycle { n: 5 })?;
            let spindle = generate(&FamilySpec::MoserSpindle)?;
            if isomorphic(g, &c5) || isomorphic(g, &spindle) {
                Ok(Verdict::Note(format!("survivor: {record}")))
            } else {
                Ok(Verdict::Violation(format!(
                    "{record}: imperfect with sn = n-2 but not C_5 or the Moser spindle"
                )))
            }
        }
        "lemma-ivs" => {
            let chi = chromatic_number(g)?;
            if n < 2 {
                return Ok(Verdict::Pass);
            }
            let sn_value = sn_budgeted(g, chi, budget)?.value;
            if sn_value != n - 2 {
                return Ok(Verdict::Pass);
            }
            let ivs = ivs_chi(g)?;
            if ivs == 1 {
                Ok(Verdict::Pass)
            } else {
                Ok(Verdict::Violation(format!("{record}: sn=n-2 but ivs_chi={ivs}")))
            }
        }
        "two-colourings-prop" => {
            let chi = chromatic_number(g)?;
            let classes: Vec<Colouring> = enumerate_colourings(g, chi)?.take(3).collect();
            if classes.len() != 2 {
                return Ok(Verdict::Pass);
            }
            let all: Vec<usize> = (0..n).collect();
            for c in &classes {
                let mut found = false;
                for s in Combinations::new(&all, chi as usize) {
                    if is_critical(g, c, &s)? {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return Ok(Verdict::Violation(format!(
                        "{record}: no critical set of size chi={chi}"
                    )));
                }
            }
            Ok(Verdict::Note(format!("two-class graph checked: {record}")))
        }
        "oscs-subgraph-monotone" | "conj2-olcs-subgraph" => {
            // Spanning subgraphs by edge deletion only. The induced reading
            // is refuted already at order 5 (a triangle with two pendant
            // edges beats its one-pendant induced subgraph for both oscs and
            // olcs), so the monotonicity claims quantify over subgraphs with
            // the full vertex set; see the refutation test below.
            let use_olcs = predicate == "conj2-olcs-subgraph";
            let chi = chromatic_number(g)?;
            let value_of = |h: &ColourStructure| -> Result<usize> {
                Ok(if use_olcs {
                    olcs_budgeted(h, chi, budget)?.value
                } else {
                    oscs_budgeted(h, chi, budget)?.value
                })
            };
            let base = value_of(g)?;
            let edges = g.edges();
            let m = edges.len();
            if m == 0 {
                return Ok(Verdict::Pass);
            }
            for mask in 0..(1u32 << m) - 1 {
                let kept: Vec<Vec<usize>> = (0..m)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| edges[i].clone())
                    .collect();
                let h = ColourStructure::new(n, kept)?;
                if chromatic_number(&h)? != chi {
                    continue;
                }
                let sub = value_of(&h)?;
                if sub < base {
                    return Ok(Verdict::Violation(format!(
                        "{record}: spanning subgraph mask {mask:#x} has value {sub} < {base}"
                    )));
                }
            }
            Ok(Verdict::Pass)
        }
        other => Err(Error::UnknownPredicate(other.to_string())),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Checkpoint {
    predicate: String,
    kpolicy: KPolicy,
    processed: usize,
    violations: Vec<String>,
    notes: Vec<String>,
    record_errors: Vec<String>,
}

const SCAN_CHUNK: usize = 64;

/// Evaluate a registered predicate over a stream of graph6 records.
///
/// Disconnected records are skipped with a note (the parameters are additive
/// over components); malformed records are collected as record errors. With a
/// checkpoint path the scan is resumable: progress is flushed after every
/// chunk and a resumed run produces the identical final report.
pub fn scan_stream<I>(
    records: I,
    predicate: &str,
    policy: KPolicy,
    budget: &Budget,
    checkpoint_path: Option<&Path>,
) -> Result<CheckReport>
where
    I: IntoIterator<Item = String>,
{
    if !all_predicates().contains(&predicate) {
        return Err(Error::UnknownPredicate(predicate.to_string()));
    }
    let start = Instant::now();
    let mut state = Checkpoint {
        predicate: predicate.to_string(),
        kpolicy: policy,
        processed: 0,
        violations: Vec::new(),
        notes: Vec::new(),
        record_errors: Vec::new(),
    };
    if let Some(path) = checkpoint_path {
        if path.exists() {
            let loaded: Checkpoint = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            if loaded.predicate != predicate || loaded.kpolicy != policy {
                return Err(Error::input(
                    "checkpoint was written by a different scan configuration",
                ));
            }
            state = loaded;
        }
    }

    let mut records = records
        .into_iter()
        .filter(|line| !line.trim().is_empty())
        .skip(state.processed);
    loop {
        let chunk: Vec<String> = records.by_ref().take(SCAN_CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<std::result::Result<Verdict, String>> = chunk
            .par_iter()
            .map(|line| {
                let record = line.trim();
                match parse_graph6(record) {
                    Err(e) => Ok(Err(format!("{record}: {e}"))),
                    Ok(g) => {
                        if !g.is_connected() {
                            return Ok(Ok(Verdict::Note(format!(
                                "skipped disconnected record: {record}"
                            ))));
                        }
                        eval_predicate(predicate, &g, record, policy, budget).map(Ok)
                    }
                }
            })
            .collect::<Result<Vec<_>>>()?;
        for outcome in outcomes {
            state.processed += 1;
            match outcome {
                Err(e) => state.record_errors.push(e),
                Ok(Verdict::Pass) => {}
                Ok(Verdict::Note(note)) => state.notes.push(note),
                Ok(Verdict::Violation(v)) => state.violations.push(v),
            }
        }
        if let Some(path) = checkpoint_path {
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, serde_json::to_string(&state)?)?;
            std::fs::rename(&tmp, path)?;
        }
    }

    let pass = state.violations.is_empty();
    Ok(CheckReport {
        name: format!("scan:{predicate}"),
        citation: predicate_citation(predicate).to_string(),
        expected: "no violations".to_string(),
        computed: format!(
            "{} records, {} violations",
            state.processed,
            state.violations.len()
        ),
        pass,
        kind: predicate_kind(predicate),
        runtime_secs: start.elapsed().as_secs_f64(),
        violations: state.violations,
        notes: state.notes,
        record_errors: state.record_errors,
    })
}
