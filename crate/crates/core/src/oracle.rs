//! Brute-force reference answers, written straight from the definitions.
//!
//! Nothing here shares code with the structures it checks.

use crate::error::{Error, Result};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_n_exhaustive: usize,
    /// Values used when enumerating arbitrary (not 1-difference) sequences.
    pub value_alphabet: Vec<i64>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_n_exhaustive: 12,
            value_alphabet: vec![0, 1, 2, 3],
        }
    }
}

/// Least `i >= x` with `values[i] >= y`; `n` if none.
pub fn naive_fl(values: &[i64], x: i64, y: i64) -> usize {
    let n = values.len();
    let mut i = if x < 0 { 0 } else { x as usize };
    while i < n {
        if values[i] >= y {
            return i;
        }
        i += 1;
    }
    n
}

/// Least `j >= x` with `values[j] <= d`; `n` if none.
pub fn naive_fs(values: &[i64], x: i64, d: i64) -> usize {
    let n = values.len();
    let mut j = if x < 0 { 0 } else { x as usize };
    while j < n {
        if values[j] <= d {
            return j;
        }
        j += 1;
    }
    n
}

/// Is `(xb, yb)` down-left reachable from `(x, y)`?
pub fn down_left_reachable(values: &[i64], x: usize, y: i64, xb: usize, yb: i64) -> bool {
    xb <= x && values[xb] <= yb && yb <= y && (xb..x).all(|i| values[i] < y)
}

/// The valley of `(x, y)`.
///
/// The positions reachable from `(x, y)` form a range `lo..=x` (walk left
/// while values stay below `y`), and any of them can be reached at its own
/// floor height. The valley is the rightmost position of minimum value in
/// that range. Requires `x < n` and `y >= values[x]`.
pub fn naive_valley(values: &[i64], x: usize, y: i64) -> usize {
    assert!(x < values.len(), "x out of range");
    assert!(y >= values[x], "y below the landscape");
    let mut lo = x;
    while lo > 0 && values[lo - 1] < y {
        lo -= 1;
    }
    let low = values[lo..=x].iter().copied().min().expect("range is non-empty");
    (lo..=x).rev().find(|&i| values[i] == low).expect("minimum is attained")
}

/// [`naive_valley`] by enumerating every down-left reachable point. Slow;
/// used to cross-check the range form.
pub fn naive_valley_enumerated(values: &[i64], x: usize, y: i64) -> usize {
    assert!(x < values.len(), "x out of range");
    assert!(y >= values[x], "y below the landscape");
    let mut best: Option<i64> = None;
    for xb in 0..=x {
        for yb in values[xb]..=y {
            if down_left_reachable(values, x, y, xb, yb) {
                best = Some(best.map_or(yb, |b: i64| b.min(yb)));
            }
        }
    }
    let low = best.expect("(x, y) reaches itself");
    // the rightmost position at that height overall, per the definition
    (0..=x).rev().find(|&xb| values[xb] == low).expect("minimum is attained")
}

/// `naive_valley(values, x, values[x])` for all `x`, plus the `n - 1`
/// convention at the end.
pub fn naive_valleys(values: &[i64]) -> Vec<usize> {
    let n = values.len();
    let mut out: Vec<usize> = (0..n).map(|x| naive_valley(values, x, values[x])).collect();
    out.push(n - 1);
    out
}

/// Walks parent links `depth(v) - d` times.
pub fn naive_la(tree: &Tree, v: usize, d: i64) -> Result<usize> {
    let parent = tree.parents();
    if v >= parent.len() {
        return Err(Error::UnknownNode(v));
    }
    let mut depth = 0usize;
    let mut u = v;
    while let Some(p) = parent[u] {
        depth += 1;
        u = p;
    }
    if d < 0 || d as usize > depth {
        return Err(Error::DepthOutOfRange {
            node: v,
            d,
            depth,
        });
    }
    let mut u = v;
    for _ in 0..depth - d as usize {
        u = parent[u].expect("walk stays below the root");
    }
    Ok(u)
}

/// All 1-difference sequences of length `n` starting at `start`, in
/// lexicographic order of their steps.
pub fn enumerate_sequences(
    cfg: &OracleConfig,
    n: usize,
    start: i64,
) -> Result<impl Iterator<Item = Vec<i64>>> {
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    if n > cfg.max_n_exhaustive {
        return Err(Error::TooLarge {
            n,
            max: cfg.max_n_exhaustive,
        });
    }
    let count = 3usize.pow(n as u32 - 1);
    Ok((0..count).map(move |mut code| {
        let mut v = Vec::with_capacity(n);
        v.push(start);
        for _ in 1..n {
            let step = (code % 3) as i64 - 1;
            code /= 3;
            v.push(v[v.len() - 1] + step);
        }
        v
    }))
}

/// All sequences of length `n` over `alphabet`.
pub fn enumerate_arbitrary(alphabet: &[i64], n: usize) -> impl Iterator<Item = Vec<i64>> + '_ {
    let a = alphabet.len();
    let count = a.pow(n as u32);
    (0..count).map(move |mut code| {
        (0..n)
            .map(|_| {
                let v = alphabet[code % a];
                code /= a;
                v
            })
            .collect()
    })
}
