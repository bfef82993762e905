//! Exact solvers for critical sets in proper graph colourings and weak
//! hypergraph colourings: the Sudoku number `sn(G,k)` and its three companion
//! parameters, per-colouring smallest/largest critical sets, generators for
//! the families under study, format parsing, and a named verification
//! harness.

pub mod cache;
mod combi;
pub mod engine;
pub mod error;
pub mod generators;
pub mod io;
pub mod model;
pub mod params;
pub mod rng;
pub mod tree;
pub mod verify;

pub use engine::{
    count_extensions, fixed_vertices, is_critical, is_determining, propagate_forced, Budget,
    Propagated, SearchCtx,
};
pub use error::{Error, Result};
pub use model::{
    is_proper, restrict, ColourStructure, Colouring, ParamResult, PartialColouring, StructureKind,
};
pub use params::{
    chromatic_number, enumerate_colourings, ivs_chi, lcs, olcs, oscs, scs, sn, ulcs,
    CanonicalColourings,
};
pub use tree::{r_domination, sn_tree};
