//! Input and output formats: graph6 records, hypergraph JSON, plain edge
//! lists, and colouring files.
//!
//! graph6 follows the standard encoding: an optional `>>graph6<<` header, the
//! order `n` in one byte (`n + 63`) or the 4-byte long form, then the upper
//! triangle of the adjacency matrix packed 6 bits per byte column-wise, each
//! byte offset by 63.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ColourStructure, Colouring, MAX_COLOURS};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn sextet(record: &[u8], offset: usize) -> Result<u64> {
    let byte = *record.get(offset).ok_or(Error::Parse {
        offset,
        msg: "record truncated".to_string(),
    })?;
    if !(63..=126).contains(&byte) {
        return Err(Error::Parse {
            offset,
            msg: format!("byte {byte} outside graph6 range 63..=126"),
        });
    }
    Ok(u64::from(byte - 63))
}

/// Decode one graph6 record (header optional) into a graph.
pub fn parse_graph6(record: &str) -> Result<ColourStructure> {
    let record = record.trim_end_matches(['\r', '\n']);
    let record = record.strip_prefix(GRAPH6_HEADER).unwrap_or(record);
    let bytes = record.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            msg: "empty record".to_string(),
        });
    }
    let (n, mut offset) = if bytes[0] == 126 {
        if bytes.len() > 1 && bytes[1] == 126 {
            let mut n = 0u64;
            for i in 2..8 {
                n = (n << 6) | sextet(bytes, i)?;
            }
            (n, 8)
        } else {
            let mut n = 0u64;
            for i in 1..4 {
                n = (n << 6) | sextet(bytes, i)?;
            }
            (n, 4)
        }
    } else {
        (sextet(bytes, 0)?, 1)
    };
    if n > 4096 {
        return Err(Error::Parse {
            offset: 0,
            msg: format!("order {n} is beyond the supported range"),
        });
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != offset + nbytes {
        return Err(Error::Parse {
            offset: bytes.len().min(offset + nbytes),
            msg: format!(
                "expected {} bytes for order {n}, found {}",
                offset + nbytes,
                bytes.len()
            ),
        });
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    let mut current = 0u64;
    for j in 1..n {
        for i in 0..j {
            if bit_index.is_multiple_of(6) {
                current = sextet(bytes, offset)?;
                offset += 1;
            }
            let bit = (current >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    // padding bits must be zero
    if !nbits.is_multiple_of(6) {
        let pad = current & ((1 << (6 - nbits % 6)) - 1);
        if pad != 0 {
            return Err(Error::Parse {
                offset: offset - 1,
                msg: "nonzero padding bits".to_string(),
            });
        }
    }
    ColourStructure::graph(n, &edges)
}

/// Encode a graph as a graph6 record (no header).
pub fn to_graph6(structure: &ColourStructure) -> Result<String> {
    if !structure.is_graph() {
        return Err(Error::input("graph6 encodes graphs only"));
    }
    let n = structure.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    } else {
        return Err(Error::input("order too large for the supported encoding"));
    }
    let mut adj = vec![false; n * n];
    for e in structure.edges() {
        adj[e[0] * n + e[1]] = true;
        adj[e[1] * n + e[0]] = true;
    }
    let mut current = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            current <<= 1;
            if adj[i * n + j] {
                current |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(current + 63);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((current << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ascii"))
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Parse `{"n": ..., "edges": [[...], ...]}` into a validated structure.
pub fn parse_hypergraph_json(text: &str) -> Result<ColourStructure> {
    let raw: HypergraphJson = serde_json::from_str(text)?;
    ColourStructure::new(raw.n, raw.edges)
}

pub fn to_hypergraph_json(structure: &ColourStructure) -> String {
    serde_json::to_string(&HypergraphJson {
        n: structure.n(),
        edges: structure.edges().to_vec(),
    })
    .expect("plain data serializes")
}

/// Plain edge list: `#` comments, first data line the order, then `u v` pairs.
pub fn parse_edge_list(text: &str) -> Result<ColourStructure> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: String| Error::Parse {
            offset: lineno,
            msg,
        };
        if n.is_none() {
            n = Some(
                line.parse()
                    .map_err(|_| bad(format!("expected the vertex count, found {line:?}")))?,
            );
            continue;
        }
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .ok_or_else(|| bad("missing endpoint".to_string()))?
            .parse()
            .map_err(|_| bad(format!("bad edge line {line:?}")))?;
        let v: usize = parts
            .next()
            .ok_or_else(|| bad("missing endpoint".to_string()))?
            .parse()
            .map_err(|_| bad(format!("bad edge line {line:?}")))?;
        if parts.next().is_some() {
            return Err(bad(format!("trailing tokens on edge line {line:?}")));
        }
        edges.push((u, v));
    }
    let n = n.ok_or(Error::Parse {
        offset: 0,
        msg: "missing vertex count".to_string(),
    })?;
    ColourStructure::graph(n, &edges)
}

/// Colouring file: a JSON array of integers in `[1..k]`.
pub fn parse_colouring(text: &str, k: u8) -> Result<Colouring> {
    if k == 0 || k > MAX_COLOURS {
        return Err(Error::input(format!("k must be in 1..={MAX_COLOURS}")));
    }
    let raw: Vec<u8> = serde_json::from_str(text)?;
    Colouring::new(raw, k)
}
