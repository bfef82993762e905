//! Small shared combinatorics helpers.

/// Lexicographic size-`r` combinations of `pool`.
pub(crate) struct Combinations<'a> {
    pool: &'a [usize],
    idx: Vec<usize>,
    first: bool,
}

impl<'a> Combinations<'a> {
    pub(crate) fn new(pool: &'a [usize], size: usize) -> Self {
        Combinations {
            pool,
            idx: (0..size).collect(),
            first: true,
        }
    }
}

impl<'a> Iterator for Combinations<'a> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let r = self.idx.len();
        let n = self.pool.len();
        if r > n {
            return None;
        }
        if self.first {
            self.first = false;
        } else if r == 0 {
            return None;
        } else {
            let mut i = r;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                if self.idx[i] != i + n - r {
                    break;
                }
            }
            self.idx[i] += 1;
            for j in i + 1..r {
                self.idx[j] = self.idx[j - 1] + 1;
            }
        }
        Some(self.idx.iter().map(|&i| self.pool[i]).collect())
    }
}

/// Merge two sorted disjoint vertex lists.
pub(crate) fn merged(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
