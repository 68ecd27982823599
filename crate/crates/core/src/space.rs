use serde::Serialize;

use crate::fl::OneLevel;
use crate::level::Level;

/// Exact entry counts of a finished one-level structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpaceReport {
    pub n: usize,
    pub kappa: usize,
    pub jump_entries: usize,
    pub total_ladder_entries: usize,
    /// Entries of the ladders at positions `1..=n-2`.
    pub interior_ladder_entries: usize,
    /// `(κ - 1 + κ') · n`.
    pub bound: usize,
    /// Values, jumps, ladder offsets and heights, plus all ladder entries.
    pub words_estimate: usize,
}

impl SpaceReport {
    pub fn of<T: Level>(fl: &OneLevel<T>) -> Self {
        let n = fl.len();
        let heights = fl.ladder_heights();
        let total: usize = heights.iter().map(|&h| h as usize).sum();
        let interior: usize = if n > 2 {
            heights[1..n - 1].iter().map(|&h| h as usize).sum()
        } else {
            0
        };
        let report = SpaceReport {
            n,
            kappa: fl.kappa().get(),
            jump_entries: fl.jump().len(),
            total_ladder_entries: total,
            interior_ladder_entries: interior,
            bound: fl.kappa().space_factor() * n,
            words_estimate: 4 * n + total,
        };
        assert!(
            report.interior_ladder_entries <= report.bound,
            "interior ladders exceed (κ-1+κ')·n: {report:?}"
        );
        report
    }

    /// `interior <= bound` and `total <= bound + 2(n - 1)`.
    pub fn within_bounds(&self) -> bool {
        self.interior_ladder_entries <= self.bound
            && self.total_ladder_entries <= self.bound + 2 * (self.n - 1)
    }
}

/// Counts the entries of `fl`; see [`SpaceReport`].
pub fn space_report<T: Level>(fl: &OneLevel<T>) -> SpaceReport {
    SpaceReport::of(fl)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_counts() {
        let fl = OneLevel::from_values(vec![1i64, 0, 1, 2, 1, 2], 5).unwrap();
        let r = space_report(&fl);
        assert_eq!(r.total_ladder_entries, 5);
        assert_eq!(r.interior_ladder_entries, 4);
        assert_eq!(r.bound, 48);
        assert_eq!(r.jump_entries, 6);
        assert!(r.within_bounds());
    }

    #[test]
    fn singleton_counts() {
        let fl = OneLevel::from_values(vec![3i64], 5).unwrap();
        let r = space_report(&fl);
        assert_eq!(r.total_ladder_entries, 0);
        assert_eq!(r.interior_ladder_entries, 0);
        assert!(r.within_bounds());
    }

    #[test]
    fn staircase_endpoint() {
        let fl = OneLevel::from_values((0..16).collect::<Vec<i64>>(), 5).unwrap();
        assert_eq!(fl.ladder_heights()[0], 15);
        assert!(space_report(&fl).within_bounds());
    }
}
