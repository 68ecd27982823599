//! Doubling jump-pointer baseline: `Θ(n log n)` entries, `O(log n)` hops per
//! query. Used only as a comparison point for the one-level structure.

use crate::level::Level;
use crate::seq::DiffSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublingFl<T> {
    seq: DiffSequence<T>,
    levels: usize,
    /// Row-major `n × levels`: `table[x * levels + k] = FL(x, values[x] + 2^k)`.
    table: Vec<u32>,
}

impl<T: Level> DoublingFl<T> {
    pub fn build(seq: DiffSequence<T>) -> Self {
        let n = seq.len();
        let span = seq.span();
        // ⌈log2(span + 2)⌉ + 1
        let levels = (span + 2).next_power_of_two().trailing_zeros() as usize + 1;
        let y_min = seq.min();
        let mut right_sight = vec![n as u32; span + 2];
        let mut table = vec![0u32; n * levels];
        for x in (0..n).rev() {
            let l = seq.values()[x].offset_from(y_min);
            right_sight[l] = x as u32;
            let row = &mut table[x * levels..(x + 1) * levels];
            for (k, slot) in row.iter_mut().enumerate() {
                *slot = right_sight[(l + (1 << k)).min(span + 1)];
            }
        }
        DoublingFl { seq, levels, table }
    }

    /// `FL(x, y)` with bottom encoded as `n`.
    #[inline]
    pub fn query(&self, x: i64, y: T) -> usize {
        self.query_counted(x, y).0
    }

    /// The answer and the number of table hops taken.
    #[inline]
    pub fn query_counted(&self, x: i64, y: T) -> (usize, usize) {
        let values = self.seq.values();
        let n = values.len();
        if x >= n as i64 || y > self.seq.max() {
            return (n, 0);
        }
        let mut at = if x < 0 { 0 } else { x as usize };
        let mut hops = 0;
        while y > values[at] {
            let t = y.offset_from(values[at]);
            let k = (usize::BITS - 1 - t.leading_zeros()) as usize;
            // lands exactly at height values[at] + 2^k, so t drops below 2^k
            at = self.table[at * self.levels + k] as usize;
            hops += 1;
            debug_assert!(hops <= self.levels);
            if at == n {
                break;
            }
        }
        (at, hops)
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn entries(&self) -> usize {
        self.table.len()
    }

    /// `FL(x, values[x] + 2^k)`.
    pub fn entry(&self, x: usize, k: usize) -> usize {
        self.table[x * self.levels + k] as usize
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn heap_bytes(&self) -> usize {
        self.len() * std::mem::size_of::<T>() + self.table.len() * std::mem::size_of::<u32>()
    }
}

/// See [`DoublingFl::build`].
pub fn build_doubling<T: Level>(seq: DiffSequence<T>) -> DoublingFl<T> {
    DoublingFl::build(seq)
}
