//! Left-to-right valley sweep.
//!
//! The valley of `(x, y)` is the rightmost deepest point reachable from
//! `(x, y)` by moving left and down while staying strictly above the
//! landscape. The sweep keeps a stack of candidate valleys, each carrying the
//! floor value and the highest value seen between it and the sweep line.

use crate::error::{Error, Result};

/// One candidate valley on the sweep stack.
///
/// The implicit bottom sentinel (`low = -inf`, `high = +inf`) is not stored;
/// it is the empty-stack case. Above it, `low` strictly increases and `high`
/// strictly decreases towards the top.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValleyFrame<T> {
    pub x: usize,
    pub low: T,
    pub high: T,
}

/// Stack operation counts of one sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepCounters {
    pub pushes: usize,
    pub pops: usize,
}

/// `Valley[0..=n]`: the valley of `(x, values[x])` for every `x`, followed by
/// the convention `Valley[n] = n - 1`.
///
/// Accepts any totally ordered values, not only 1-difference sequences.
pub fn compute_valleys<T: PartialOrd + Copy>(values: &[T]) -> Result<Vec<usize>> {
    compute_valleys_counted(values).map(|(v, _)| v)
}

pub fn compute_valleys_counted<T: PartialOrd + Copy>(
    values: &[T],
) -> Result<(Vec<usize>, SweepCounters)> {
    let n = values.len();
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let mut valley = vec![0usize; n + 1];
    let mut stack: Vec<ValleyFrame<T>> = Vec::new();
    let mut c = SweepCounters::default();

    for (x, &y) in values.iter().enumerate() {
        while stack.last().is_some_and(|f| f.low >= y) {
            stack.pop();
            c.pops += 1;
        }
        // the sentinel's high is +inf
        let blocked = stack.last().is_none_or(|f| f.high >= y);
        if blocked {
            valley[x] = x;
            if stack.last().is_none_or(|f| f.high > y) {
                stack.push(ValleyFrame { x, low: y, high: y });
                c.pushes += 1;
            }
        } else {
            // a deeper valley is reachable: drop frames whose walls are lower than y
            while stack.len() >= 2 && stack[stack.len() - 2].high < y {
                stack.pop();
                c.pops += 1;
            }
            let below_high_exceeds = stack.len() < 2 || stack[stack.len() - 2].high > y;
            let top = stack.last_mut().expect("non-sentinel top");
            valley[x] = top.x;
            if below_high_exceeds {
                top.high = y;
            } else {
                stack.pop();
                c.pops += 1;
            }
        }
        debug_assert!(stack.windows(2).all(|w| w[0].low < w[1].low && w[0].high > w[1].high));
    }
    valley[n] = n - 1;
    Ok((valley, c))
}

/// `Weight[x̄]`: how many positions have valley `x̄`. `valley` is the full
/// `Valley[0..=n]` array; the trailing convention entry is ignored.
pub fn weights(valley: &[usize]) -> Vec<usize> {
    let n = valley.len().saturating_sub(1);
    let mut w = vec![0usize; n];
    for &v in &valley[..n] {
        w[v] += 1;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monotone_examples() {
        assert_eq!(compute_valleys(&[0, 1, 2]).unwrap(), vec![0, 0, 0, 2]);
        assert_eq!(compute_valleys(&[2, 1, 0]).unwrap(), vec![0, 1, 2, 2]);
    }

    #[test]
    fn mixed_example() {
        assert_eq!(
            compute_valleys(&[1, 0, 1, 2, 1, 2]).unwrap(),
            vec![0, 1, 1, 1, 4, 4, 5]
        );
    }

    #[test]
    fn singleton_and_empty() {
        assert_eq!(compute_valleys(&[7]).unwrap(), vec![0, 0]);
        assert_eq!(compute_valleys::<i32>(&[]), Err(Error::EmptySequence));
    }

    #[test]
    fn plateau_keeps_rightmost_floor() {
        // equal floors: the rightmost one wins
        assert_eq!(compute_valleys(&[0, 0, 1]).unwrap(), vec![0, 1, 1, 2]);
    }

    #[test]
    fn works_on_reals() {
        assert_eq!(
            compute_valleys(&[0.5, -1.25, 3.0, 0.0]).unwrap(),
            vec![0, 1, 1, 3, 3]
        );
    }

    #[test]
    fn counters_are_linear() {
        let v: Vec<i32> = (0..1000).map(|i| (i * 7919 % 13) as i32).collect();
        let (_, c) = compute_valleys_counted(&v).unwrap();
        assert!(c.pushes <= v.len());
        assert!(c.pops <= c.pushes);
    }

    #[test]
    fn weights_sum_to_n() {
        let valley = compute_valleys(&[1, 0, 1, 2, 1, 2]).unwrap();
        let w = weights(&valley);
        assert_eq!(w, vec![1, 3, 0, 0, 2, 0]);
        assert_eq!(w.iter().sum::<usize>(), 6);
    }
}
