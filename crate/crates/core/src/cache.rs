//! Append-only result cache keyed by (structure hash, parameter, k).
//!
//! Records are whole JSON lines written with a single appending call, so
//! concurrent writers never interleave partial records. Lookups scan the file
//! and the last matching record wins.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::model::{ColourStructure, ParamResult, StructureKind};

pub const CACHE_ENV: &str = "CRITSET_CACHE";
const DEFAULT_PATH: &str = ".critset-cache.jsonl";

/// FNV-1a over a canonical byte encoding of the structure (kind, order,
/// sorted edge list), stable across runs and platforms.
pub fn structure_hash(structure: &ColourStructure) -> u64 {
    const OFFSET: u64 = 0xcbf29ce484222325;
    const PRIME: u64 = 0x100000001b3;
    let mut h = OFFSET;
    let mut eat = |value: u64| {
        for byte in value.to_le_bytes() {
            h ^= u64::from(byte);
            h = h.wrapping_mul(PRIME);
        }
    };
    eat(match structure.kind() {
        StructureKind::Graph => 1,
        StructureKind::Hypergraph => 2,
    });
    eat(structure.n() as u64);
    for e in structure.edges() {
        eat(e.len() as u64);
        for &v in e {
            eat(v as u64);
        }
    }
    h
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub structure: String, // hex structure hash
    pub parameter: String,
    pub k: u8,
}

impl CacheKey {
    pub fn new(structure: &ColourStructure, parameter: &str, k: u8) -> Self {
        CacheKey {
            structure: format!("{:016x}", structure_hash(structure)),
            parameter: parameter.to_string(),
            k,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheRecord {
    key: CacheKey,
    result: ParamResult,
}

#[derive(Debug, Clone)]
pub struct ResultCache {
    path: PathBuf,
}

impl ResultCache {
    pub fn at(path: impl Into<PathBuf>) -> Self {
        ResultCache { path: path.into() }
    }

    /// Default location: `$CRITSET_CACHE` or `.critset-cache.jsonl`.
    pub fn default_location() -> Self {
        let path = std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_PATH));
        ResultCache { path }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn lookup(&self, key: &CacheKey) -> Option<ParamResult> {
        let file = std::fs::File::open(&self.path).ok()?;
        let mut hit = None;
        for line in BufReader::new(file).lines() {
            let Ok(line) = line else { break };
            if let Ok(record) = serde_json::from_str::<CacheRecord>(&line) {
                if &record.key == key {
                    hit = Some(record.result);
                }
            }
        }
        hit
    }

    pub fn store(&self, key: &CacheKey, result: &ParamResult) -> Result<()> {
        let record = CacheRecord {
            key: key.clone(),
            result: result.clone(),
        };
        let mut line = serde_json::to_string(&record)?;
        line.push('\n');
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        file.write_all(line.as_bytes())?;
        Ok(())
    }
}
