//! The one-level find-larger structure.
//!
//! `FL(x, y)` is the least index `i >= x` with `values[i] >= y`, or bottom
//! (encoded as `n`) when there is none. After a linear-time build every query
//! is answered with a constant number of array reads: either directly from
//! the ladder at `x`, or from the ladder at `Jump[x̂]` for a nearby `x̂`
//! whose largest power-of-two divisor matches the query's height.

use std::fmt;

use crate::bits::{ffloor, pi_of};
use crate::error::{Error, Result};
use crate::level::Level;
use crate::seq::DiffSequence;
use crate::valley::{compute_valleys, weights};

/// Structure parameter `κ >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Kappa(usize);

impl Kappa {
    /// `κ = 5`, one of the two values minimising `κ - 1 + κ'`.
    pub const DEFAULT: Kappa = Kappa(5);

    pub fn new(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidKappa(k));
        }
        Ok(Kappa(k))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// `κ' = ⌈(2κ + 2) / (κ - 2)⌉`.
    pub fn prime(self) -> usize {
        (2 * self.0 + 2).div_ceil(self.0 - 2)
    }

    /// `κ - 1 + κ'`, the per-position bound on interior ladder entries.
    pub fn space_factor(self) -> usize {
        self.0 - 1 + self.prime()
    }
}

impl Default for Kappa {
    fn default() -> Self {
        Kappa::DEFAULT
    }
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl TryFrom<usize> for Kappa {
    type Error = Error;
    fn try_from(k: usize) -> Result<Self> {
        Kappa::new(k)
    }
}

/// Result of a find-larger or find-smaller query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Answer {
    Found(usize),
    Bottom,
}

impl Answer {
    /// Decodes the raw index form, where `n` means bottom.
    #[inline]
    pub fn from_index(i: usize, n: usize) -> Self {
        if i >= n {
            Answer::Bottom
        } else {
            Answer::Found(i)
        }
    }

    /// Raw index form: bottom becomes `n`.
    #[inline]
    pub fn to_index(self, n: usize) -> usize {
        match self {
            Answer::Found(i) => i,
            Answer::Bottom => n,
        }
    }

    pub fn found(self) -> Option<usize> {
        match self {
            Answer::Found(i) => Some(i),
            Answer::Bottom => None,
        }
    }
}

/// Which query branch produced an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `x >= n` or `y > y_max`.
    OutOfRange,
    /// `y <= values[x]` after clamping `x`.
    Trivial,
    /// `y - values[x] < κ`: read from the ladder at `x`.
    Direct,
    /// Redirected through `Jump[x̂]`.
    Jumped,
}

/// Everything a query touched, for invariant checks and debugging.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QueryTrace {
    pub branch: Branch,
    /// `x` after clamping negatives to 0.
    pub x: usize,
    /// `y - values[x]` for the ladder branches, else 0.
    pub t: usize,
    /// `⌊⌊t / κ⌋⌋` on the jumped branch, else 0.
    pub p: usize,
    pub x_hat: usize,
    /// Position of the ladder read, if any.
    pub ladder_at: Option<usize>,
    /// Zero-based slot read inside that ladder.
    pub slot: usize,
    pub ladder_height: usize,
    pub answer: usize,
}

/// Counts of the writes done by one build.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub right_sight_writes: usize,
    pub ladder_copies: usize,
    pub valley_pushes: usize,
    pub valley_pops: usize,
}

#[derive(Default)]
struct Recorder {
    t: usize,
    p: usize,
    x_hat: usize,
    ladder_at: Option<usize>,
    slot: usize,
    height: usize,
}

/// Hot per-position data, kept together so a query touches one record per
/// position it visits.
///
/// `own` and `jumped` are ladder bases: the entry `L[y]` of the ladder they
/// refer to lives at `ladder_data[base + (y - y_min)]`. `own` is for the
/// ladder at this position, `jumped` for the ladder at `Jump[x]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Slot<T> {
    y: T,
    own: isize,
    jumped: isize,
}

/// The finished one-level structure. Immutable after [`OneLevel::build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneLevel<T> {
    seq: DiffSequence<T>,
    kappa: Kappa,
    jump: Vec<u32>,
    ladder_start: Vec<usize>,
    ladder_height: Vec<u32>,
    ladder_data: Vec<u32>,
    slots: Vec<Slot<T>>,
}

impl<T: Level> OneLevel<T> {
    pub fn build(seq: DiffSequence<T>, kappa: Kappa) -> Self {
        Self::build_with_stats(seq, kappa).0
    }

    /// Validates `values` and builds with a raw `κ`.
    pub fn from_values(values: Vec<T>, kappa: usize) -> Result<Self> {
        let kappa = Kappa::new(kappa)?;
        Ok(Self::build(DiffSequence::new(values)?, kappa))
    }

    pub fn build_with_stats(seq: DiffSequence<T>, kappa: Kappa) -> (Self, BuildStats) {
        let n = seq.len();
        let values = seq.values();
        let (valley, counters) =
            crate::valley::compute_valleys_counted(values).expect("sequence is non-empty");
        let weight = weights(&valley);
        let span = seq.span();
        let y_min = seq.min();
        let level: Vec<usize> = values.iter().map(|&v| v.offset_from(y_min)).collect();

        let k = kappa.get();
        let kp = kappa.prime();
        let mut ladder_height = Vec::with_capacity(n);
        for x in 0..n {
            let full = span - level[x];
            let h = if x == 0 || x == n - 1 {
                full
            } else {
                let by_weight = kp.saturating_mul(weight[x].saturating_sub(1)).saturating_sub(2);
                (k - 1).max(by_weight).min(full)
            };
            ladder_height.push(h as u32);
        }
        let mut ladder_start = Vec::with_capacity(n);
        let mut total = 0usize;
        for &h in &ladder_height {
            ladder_start.push(total);
            total += h as usize;
        }

        // RightSight[l] for l in 0..=span+1, relative to y_min; starts at bottom
        let mut right_sight = vec![n as u32; span + 2];
        let mut ladder_data = vec![0u32; total];
        let mut jump = vec![0u32; n];
        let mut stats = BuildStats {
            valley_pushes: counters.pushes,
            valley_pops: counters.pops,
            ..BuildStats::default()
        };
        for x in (0..n).rev() {
            let l = level[x];
            right_sight[l] = x as u32;
            stats.right_sight_writes += 1;
            let h = ladder_height[x] as usize;
            let start = ladder_start[x];
            ladder_data[start..start + h].copy_from_slice(&right_sight[l + 1..l + 1 + h]);
            stats.ladder_copies += h;
            if x > 0 {
                let target = l
                    .saturating_add((k - 2).saturating_mul(pi_of(x)))
                    .min(span + 1);
                jump[x] = valley[right_sight[target] as usize] as u32;
            }
        }

        let base = |x: usize| ladder_start[x] as isize - level[x] as isize - 1;
        let slots = (0..n)
            .map(|x| Slot {
                y: values[x],
                own: base(x),
                jumped: base(jump[x] as usize),
            })
            .collect();
        let fl = OneLevel {
            seq,
            kappa,
            jump,
            ladder_start,
            ladder_height,
            ladder_data,
            slots,
        };
        (fl, stats)
    }

    /// `FL(x, y)` with bottom encoded as `n`.
    #[inline]
    pub fn fl_index(&self, x: i64, y: T) -> usize {
        self.run::<false>(x, y, &mut Recorder::default())
    }

    /// `FL(x, y)`.
    #[inline]
    pub fn fl_query(&self, x: i64, y: T) -> Answer {
        Answer::from_index(self.fl_index(x, y), self.len())
    }

    /// Runs the query and reports the path it took.
    pub fn trace(&self, x: i64, y: T) -> QueryTrace {
        let mut rec = Recorder::default();
        let n = self.len();
        let answer = self.run::<true>(x, y, &mut rec);
        let cx = x.clamp(0, n as i64) as usize;
        let branch = if x >= n as i64 || y > self.seq.max() {
            Branch::OutOfRange
        } else if rec.ladder_at.is_none() {
            Branch::Trivial
        } else if rec.p == 0 {
            Branch::Direct
        } else {
            Branch::Jumped
        };
        let t = match branch {
            Branch::Direct => y.offset_from(self.seq.values()[cx]),
            Branch::Jumped => rec.t,
            _ => 0,
        };
        QueryTrace {
            branch,
            x: cx,
            t,
            p: rec.p,
            x_hat: rec.x_hat,
            ladder_at: rec.ladder_at,
            slot: rec.slot,
            ladder_height: rec.height,
            answer,
        }
    }

    #[inline(always)]
    fn run<const TRACE: bool>(&self, x: i64, y: T, rec: &mut Recorder) -> usize {
        let n = self.slots.len();
        if x >= n as i64 || y > self.seq.max() {
            return n;
        }
        let x = if x < 0 { 0 } else { x as usize };
        let slot = &self.slots[x];
        if y <= slot.y {
            return x;
        }
        let k = self.kappa.get();
        let t = y.offset_from(slot.y);
        let level = y.offset_from(self.seq.min());
        if t < k {
            self.check_read::<TRACE>(x, y, rec);
            return self.ladder_data[slot.own.wrapping_add_unsigned(level) as usize] as usize;
        }
        let p = ffloor(t / k);
        // largest multiple of p not above x, moved down by p if it is also a
        // multiple of 2p, so that a positive x̂ has pi_of(x̂) == p
        let mut x_hat = x & !(p - 1);
        if x_hat > 0 && x_hat & p == 0 {
            x_hat -= p;
        }
        debug_assert!(k * p <= t && t < 2 * k * p);
        debug_assert!(x - x_hat < 2 * p);
        debug_assert!(x_hat == 0 || pi_of(x_hat) == p);
        if TRACE {
            rec.t = t;
            rec.p = p;
            rec.x_hat = x_hat;
        }
        self.check_read::<TRACE>(self.jump[x_hat] as usize, y, rec);
        self.ladder_data[self.slots[x_hat].jumped.wrapping_add_unsigned(level) as usize] as usize
    }

    /// Records the ladder read and, in debug builds, checks that `y` lies
    /// in the index set of the ladder at `at`. Compiles to nothing in
    /// release builds of the untraced path.
    #[inline(always)]
    fn check_read<const TRACE: bool>(&self, at: usize, y: T, rec: &mut Recorder) {
        if TRACE || cfg!(debug_assertions) {
            let base = self.seq.values()[at];
            let height = self.ladder_height[at] as usize;
            let in_set = y > base && y.offset_from(base) <= height;
            debug_assert!(in_set, "ladder at {at} (foot {base}, height {height}) read at {y}");
            if TRACE {
                rec.ladder_at = Some(at);
                rec.slot = if y > base { y.offset_from(base) - 1 } else { usize::MAX };
                rec.height = height;
            }
        }
    }

    pub fn seq(&self) -> &DiffSequence<T> {
        &self.seq
    }

    pub fn values(&self) -> &[T] {
        self.seq.values()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn kappa(&self) -> Kappa {
        self.kappa
    }

    pub fn kappa_prime(&self) -> usize {
        self.kappa.prime()
    }

    pub fn y_min(&self) -> T {
        self.seq.min()
    }

    pub fn y_max(&self) -> T {
        self.seq.max()
    }

    /// The bottom value, `n`.
    pub fn bottom(&self) -> usize {
        self.len()
    }

    pub fn jump(&self) -> &[u32] {
        &self.jump
    }

    pub fn ladder_start(&self) -> &[usize] {
        &self.ladder_start
    }

    pub fn ladder_heights(&self) -> &[u32] {
        &self.ladder_height
    }

    pub fn ladder_data(&self) -> &[u32] {
        &self.ladder_data
    }

    /// The ladder located at `x`; slot `j` holds `FL(x, values[x] + 1 + j)`.
    pub fn ladder(&self, x: usize) -> &[u32] {
        let s = self.ladder_start[x];
        &self.ladder_data[s..s + self.ladder_height[x] as usize]
    }

    /// `L_x[y]`, or `None` when `y` is outside the ladder's index set.
    pub fn ladder_at(&self, x: usize, y: T) -> Option<usize> {
        let base = *self.seq.values().get(x)?;
        if y <= base {
            return None;
        }
        self.ladder(x).get(y.offset_from(base) - 1).map(|&e| e as usize)
    }

    /// Heap bytes held by the finished structure, including the sequence.
    pub fn heap_bytes(&self) -> usize {
        use std::mem::size_of;
        self.len() * size_of::<T>()
            + self.jump.len() * size_of::<u32>()
            + self.ladder_start.len() * size_of::<usize>()
            + self.ladder_height.len() * size_of::<u32>()
            + self.ladder_data.len() * size_of::<u32>()
            + self.slots.len() * size_of::<Slot<T>>()
    }

    /// Valley array recomputed from the stored sequence (it is not retained).
    pub fn valleys(&self) -> Vec<usize> {
        compute_valleys(self.seq.values()).expect("sequence is non-empty")
    }

    #[cfg(test)]
    pub(crate) fn corrupt_ladder_entry(&mut self, at: usize, value: u32) {
        self.ladder_data[at] = value;
    }
}

/// Find-smaller queries through a one-level structure over the negated
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FindSmaller<T> {
    inner: OneLevel<T>,
}

impl<T: Level> FindSmaller<T> {
    pub fn build(seq: &DiffSequence<T>, kappa: Kappa) -> Result<Self> {
        Ok(FindSmaller {
            inner: OneLevel::build(seq.negated()?, kappa),
        })
    }

    /// `FS(x, d)`: least `j >= x` with `values[j] <= d`, bottom encoded as `n`.
    #[inline]
    pub fn fs_index(&self, x: i64, d: T) -> usize {
        match d.checked_neg() {
            Some(nd) => self.inner.fl_index(x, nd),
            // d is T::MIN, below every value of a negatable sequence
            None => self.inner.len(),
        }
    }

    pub fn fs_query(&self, x: i64, d: T) -> Answer {
        Answer::from_index(self.fs_index(x, d), self.inner.len())
    }

    /// The one-level structure over the negated sequence.
    pub fn negated(&self) -> &OneLevel<T> {
        &self.inner
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}
