use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Input;
use crate::error::{Error, Result};
use crate::fl::{Kappa, OneLevel};
use crate::la::LaIndex;
use crate::oracle::{naive_fl, naive_la};
use crate::seq::DiffSequence;
use crate::tree::Tree;

/// Reports keep at most this many mismatches.
pub const MAX_REPORTED: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    #[default]
    Exhaustive,
    Random,
}

impl FromStr for VerifyMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(VerifyMode::Exhaustive),
            "random" => Ok(VerifyMode::Random),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "query", rename_all = "lowercase")]
pub enum Mismatch {
    Fl {
        x: i64,
        y: i64,
        expected: usize,
        got: usize,
    },
    La {
        v: usize,
        d: i64,
        expected: usize,
        got: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub input: &'static str,
    pub n: usize,
    pub kappa: usize,
    pub mode: VerifyMode,
    pub seed: u64,
    pub total_queries: u64,
    pub mismatch_count: u64,
    pub mismatches: Vec<Mismatch>,
    pub pass: bool,
}

impl VerifyReport {
    fn new(input: &'static str, n: usize, kappa: Kappa, mode: VerifyMode, seed: u64) -> Self {
        VerifyReport {
            input,
            n,
            kappa: kappa.get(),
            mode,
            seed,
            total_queries: 0,
            mismatch_count: 0,
            mismatches: Vec::new(),
            pass: true,
        }
    }

    fn record(&mut self, ok: bool, mismatch: impl FnOnce() -> Mismatch) {
        self.total_queries += 1;
        if !ok {
            self.mismatch_count += 1;
            self.pass = false;
            if self.mismatches.len() < MAX_REPORTED {
                self.mismatches.push(mismatch());
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Checks `fl` against the linear-scan oracle. Exhaustive mode covers
/// `x in -1..=n` and `y in y_min-1..=y_max+1`; random mode draws `budget`
/// queries from the same box.
pub fn verify_fl(fl: &OneLevel<i64>, mode: VerifyMode, budget: u64, seed: u64) -> VerifyReport {
    let values = fl.values();
    let n = values.len() as i64;
    let (lo, hi) = (fl.y_min() - 1, fl.y_max() + 1);
    let mut report = VerifyReport::new("sequence", fl.len(), fl.kappa(), mode, seed);
    let mut check = |x: i64, y: i64| {
        let expected = naive_fl(values, x, y);
        let got = fl.fl_index(x, y);
        report.record(got == expected, || Mismatch::Fl {
            x,
            y,
            expected,
            got,
        });
    };
    match mode {
        VerifyMode::Exhaustive => {
            for x in -1..=n {
                for y in lo..=hi {
                    check(x, y);
                }
            }
        }
        VerifyMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..budget {
                check(rng.gen_range(-1..=n), rng.gen_range(lo..=hi));
            }
        }
    }
    report
}

/// Checks a level-ancestor index against parent-link walking over all
/// `(v, d)` with `0 <= d <= depth(v)`, or `budget` random such pairs.
pub fn verify_la(
    idx: &LaIndex,
    tree: &Tree,
    mode: VerifyMode,
    budget: u64,
    seed: u64,
) -> VerifyReport {
    let mut report = VerifyReport::new("tree", tree.len(), idx.kappa(), mode, seed);
    let mut check = |v: usize, d: i64| {
        let expected = naive_la(tree, v, d).expect("pair is in range");
        let got = idx.la_query(v, d);
        report.record(got.as_ref() == Ok(&expected), || Mismatch::La {
            v,
            d,
            expected,
            got: match got {
                Ok(u) => u.to_string(),
                Err(e) => e.to_string(),
            },
        });
    };
    match mode {
        VerifyMode::Exhaustive => {
            for v in 0..tree.len() {
                let depth = idx.depth(v).expect("node exists");
                for d in 0..=depth as i64 {
                    check(v, d);
                }
            }
        }
        VerifyMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..budget {
                let v = rng.gen_range(0..tree.len());
                let depth = idx.depth(v).expect("node exists");
                check(v, rng.gen_range(0..=depth as i64));
            }
        }
    }
    report
}

/// Builds the structure for `input` and verifies it.
pub fn cmd_verify(
    input: &Input,
    kappa: Kappa,
    mode: VerifyMode,
    budget: u64,
    seed: u64,
) -> Result<VerifyReport> {
    Ok(match input {
        Input::Sequence(values) => {
            let fl = OneLevel::build(DiffSequence::new(values.clone())?, kappa);
            verify_fl(&fl, mode, budget, seed)
        }
        Input::Tree(tree) => {
            let idx = LaIndex::build(tree, kappa);
            verify_la(&idx, tree, mode, budget, seed)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_parent_array;

    #[test]
    fn sample_passes() {
        let input = Input::Sequence(vec![1, 0, 1, 2, 1, 2]);
        let r = cmd_verify(&input, Kappa::DEFAULT, VerifyMode::Exhaustive, 0, 0).unwrap();
        assert!(r.pass);
        assert_eq!(r.mismatch_count, 0);
        assert_eq!(r.total_queries, 8 * 5);
    }

    #[test]
    fn exhaustive_query_count() {
        // (n + 2) * (y_max - y_min + 3)
        let input = Input::Sequence(vec![0, -1, -2, -1, 0, 1, 2, 3, 2]);
        let r = cmd_verify(&input, Kappa::new(3).unwrap(), VerifyMode::Exhaustive, 0, 0).unwrap();
        assert_eq!(r.total_queries, 11 * 8);
        assert!(r.pass);
    }

    #[test]
    fn corrupted_ladder_is_caught() {
        let mut fl = OneLevel::from_values(vec![1i64, 0, 1, 2, 1, 2], 5).unwrap();
        // L_0[2] = 3 becomes 2
        fl.corrupt_ladder_entry(0, 2);
        let r = verify_fl(&fl, VerifyMode::Exhaustive, 0, 0);
        assert!(!r.pass);
        assert!(r.mismatch_count >= 1);
        assert_eq!(
            r.mismatches[0],
            Mismatch::Fl {
                x: -1,
                y: 2,
                expected: 3,
                got: 2
            }
        );
        let json = r.to_json();
        assert!(json.contains("\"pass\": false"));
        assert!(json.contains("\"query\": \"fl\""));
    }

    #[test]
    fn chain_tree_pairs() {
        let input = Input::Tree(parse_parent_array("4\n-1 0 1 2").unwrap());
        let r = cmd_verify(&input, Kappa::DEFAULT, VerifyMode::Exhaustive, 0, 0).unwrap();
        assert!(r.pass);
        assert_eq!(r.total_queries, 10);
    }

    #[test]
    fn random_mode_uses_budget() {
        let input = Input::Sequence(crate::cli::gen::generate_sequence(500, 3, 0.0));
        let r = cmd_verify(&input, Kappa::DEFAULT, VerifyMode::Random, 777, 9).unwrap();
        assert_eq!(r.total_queries, 777);
        assert!(r.pass);
        let tree = parse_parent_array("6\n-1 0 0 1 1 2").unwrap();
        let r = cmd_verify(&Input::Tree(tree), Kappa::DEFAULT, VerifyMode::Random, 50, 1).unwrap();
        assert_eq!(r.total_queries, 50);
        assert!(r.pass);
    }

    #[test]
    fn rejects_non_difference_input() {
        let input = Input::Sequence(vec![0, 2]);
        assert_eq!(
            cmd_verify(&input, Kappa::DEFAULT, VerifyMode::Exhaustive, 0, 0),
            Err(Error::NotOneDifference(1))
        );
    }
}
