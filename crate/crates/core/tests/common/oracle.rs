//! Naive reference implementations, deliberately independent of the solver
//! path: properness by direct edge scans, extension counting by full
//! enumeration of all k^n assignments, and the four parameters by grouping
//! every proper colouring by its restriction to every subset.
//!
//! Everything here is exponential in n and only meant for tiny instances.

use std::collections::HashMap;

use critset_core::ColourStructure;

pub fn naive_is_proper(s: &ColourStructure, colours: &[u8]) -> bool {
    s.edges().iter().all(|e| {
        let first = colours[e[0]];
        !e[1..].iter().all(|&v| colours[v] == first)
    })
}

/// Every proper assignment in [1..k]^n, in odometer order.
pub fn all_proper_colourings(s: &ColourStructure, k: u8) -> Vec<Vec<u8>> {
    let n = s.n();
    let mut out = Vec::new();
    let mut asg = vec![1u8; n];
    if n == 0 {
        return vec![Vec::new()];
    }
    'outer: loop {
        if naive_is_proper(s, &asg) {
            out.push(asg.clone());
        }
        for i in 0..=n {
            if i == n {
                break 'outer;
            }
            if asg[i] < k {
                asg[i] += 1;
                continue 'outer;
            }
            asg[i] = 1;
        }
    }
    out
}

pub fn naive_chromatic(s: &ColourStructure) -> u8 {
    if s.n() == 0 {
        return 0;
    }
    for k in 1..=s.n() as u8 {
        if !all_proper_colourings(s, k).is_empty() {
            return k;
        }
    }
    unreachable!("all-distinct colours are always proper");
}

/// Number of proper total assignments agreeing with `cells` (None =
/// unassigned), by enumerating all k^n assignments.
pub fn naive_count_extensions(s: &ColourStructure, cells: &[Option<u8>], k: u8) -> u64 {
    let n = s.n();
    let mut count = 0;
    let mut asg = vec![1u8; n];
    if n == 0 {
        return 1;
    }
    'outer: loop {
        let agrees = (0..n).all(|v| cells[v].is_none_or(|c| c == asg[v]));
        if agrees && naive_is_proper(s, &asg) {
            count += 1;
        }
        for i in 0..=n {
            if i == n {
                break 'outer;
            }
            if asg[i] < k {
                asg[i] += 1;
                continue 'outer;
            }
            asg[i] = 1;
        }
    }
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaiveParams {
    pub sn: usize,
    pub oscs: usize,
    pub ulcs: usize,
    pub olcs: usize,
}

fn restriction_key(colours: &[u8], mask: u32) -> u64 {
    let mut key = 0u64;
    for (v, &c) in colours.iter().enumerate() {
        if mask & (1 << v) != 0 {
            key |= u64::from(c) << (4 * v);
        }
    }
    key
}

/// All four parameters at once (n <= 8): a subset determines a colouring iff
/// that colouring is alone in its restriction class; scs/lcs then come from
/// the determining-subset bitmasks per colouring.
pub fn naive_params(s: &ColourStructure, k: u8) -> Option<NaiveParams> {
    let n = s.n();
    assert!(n <= 12 && k <= 15, "oracle is for tiny instances");
    let colourings = all_proper_colourings(s, k);
    if colourings.is_empty() {
        return None;
    }
    let m = colourings.len();
    let full: u32 = if n == 0 { 0 } else { (1 << n) - 1 };
    // determining[c] holds a bit per subset mask... masks up to 2^8 = 256, so
    // use a Vec<bool> per colouring packed as four u64 words
    let nmasks = 1usize << n;
    let mut det = vec![vec![false; nmasks]; m];
    let mut groups: HashMap<u64, (u32, usize)> = HashMap::new();
    for mask in 0..=full {
        groups.clear();
        for (ci, colours) in colourings.iter().enumerate() {
            let key = restriction_key(colours, mask);
            let entry = groups.entry(key).or_insert((0, ci));
            entry.0 += 1;
        }
        for (ci, colours) in colourings.iter().enumerate() {
            let key = restriction_key(colours, mask);
            if groups[&key].0 == 1 {
                det[ci][mask as usize] = true;
            }
        }
        if n == 0 {
            break;
        }
    }
    let mut sn = usize::MAX;
    let mut oscs = 0;
    let mut ulcs = usize::MAX;
    let mut olcs = 0;
    for d in &det {
        let mut scs = usize::MAX;
        let mut lcs = 0;
        for mask in 0..nmasks {
            if !d[mask] {
                continue;
            }
            let size = (mask as u32).count_ones() as usize;
            scs = scs.min(size);
            // critical: determining and no single removal still determines
            let minimal = (0..n)
                .filter(|v| mask & (1 << v) != 0)
                .all(|v| !d[mask & !(1 << v)]);
            if minimal {
                lcs = lcs.max(size);
            }
        }
        sn = sn.min(scs);
        oscs = oscs.max(scs);
        ulcs = ulcs.min(lcs);
        olcs = olcs.max(lcs);
    }
    Some(NaiveParams {
        sn,
        oscs,
        ulcs,
        olcs,
    })
}

/// A second graph6 decoder, structured differently from the library's (bit
/// vector first, then pair walk), for cross-checking.
pub fn independent_graph6_decode(record: &str) -> Option<(usize, Vec<(usize, usize)>)> {
    let record = record.trim();
    let bytes = record.as_bytes();
    if bytes.is_empty() || bytes[0] == 126 {
        return None; // long form not needed for the cross-check
    }
    let n = (bytes[0] as usize).checked_sub(63)?;
    let mut bits = Vec::with_capacity((bytes.len() - 1) * 6);
    for &b in &bytes[1..] {
        let v = (b as usize).checked_sub(63)?;
        for shift in (0..6).rev() {
            bits.push((v >> shift) & 1 == 1);
        }
    }
    if bits.len() < n * n.saturating_sub(1) / 2 {
        return None;
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Some((n, edges))
}
