use std::hint::black_box;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::baseline::DoublingFl;
use crate::error::{Error, Result};
use crate::fl::{Kappa, OneLevel};
use crate::oracle::naive_fl;
use crate::seq::DiffSequence;
use crate::space::SpaceReport;

pub const CSV_HEADER: &str =
    "structure_name,n,kappa,build_ns,mean_query_ns,p99_query_ns,entries,bytes,seed";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureKind {
    OneLevel,
    Doubling,
    Naive,
}

impl StructureKind {
    pub fn name(self) -> &'static str {
        match self {
            StructureKind::OneLevel => "onelevel",
            StructureKind::Doubling => "doubling",
            StructureKind::Naive => "naive",
        }
    }

    /// Parses a comma-separated list such as `onelevel,doubling`.
    pub fn parse_list(s: &str) -> Result<Vec<Self>> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse())
            .collect()
    }
}

impl FromStr for StructureKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "onelevel" => Ok(StructureKind::OneLevel),
            "doubling" => Ok(StructureKind::Doubling),
            "naive" => Ok(StructureKind::Naive),
            other => Err(Error::Parse(format!("unknown structure {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub structure_name: &'static str,
    pub n: usize,
    pub kappa: usize,
    pub build_ns: u128,
    pub mean_query_ns: f64,
    pub p99_query_ns: f64,
    /// Ladder entries (one-level) or table entries (doubling).
    pub entries: usize,
    pub bytes: usize,
    pub seed: u64,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{:.3},{:.3},{},{},{}",
            self.structure_name,
            self.n,
            self.kappa,
            self.build_ns,
            self.mean_query_ns,
            self.p99_query_ns,
            self.entries,
            self.bytes,
            self.seed
        )
    }
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub structures: Vec<StructureKind>,
    pub kappa: Kappa,
    pub queries: usize,
    pub seed: u64,
    /// Queries per timed batch; `p99_query_ns` is taken over batch means.
    pub batch: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            structures: vec![StructureKind::OneLevel, StructureKind::Doubling],
            kappa: Kappa::DEFAULT,
            queries: 1_000_000,
            seed: 0,
            batch: 10_000,
        }
    }
}

/// `count` uniformly random nontrivial queries: `0 <= x < n` and
/// `values[x] < y <= y_max`. A constant sequence has none, so it gets
/// `y = values[x]` instead.
pub fn random_nontrivial_queries(values: &[i64], count: usize, seed: u64) -> Vec<(i64, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = values.len();
    let y_max = *values.iter().max().expect("non-empty");
    let any_below = values.iter().any(|&v| v < y_max);
    (0..count)
        .map(|_| loop {
            let x = rng.gen_range(0..n);
            let yx = values[x];
            if yx < y_max {
                break (x as i64, rng.gen_range(yx + 1..=y_max));
            }
            if !any_below {
                break (x as i64, yx);
            }
        })
        .collect()
}

fn time_queries(queries: &[(i64, i64)], batch: usize, f: impl Fn(i64, i64) -> usize) -> (f64, f64) {
    // warm-up pass over a prefix
    let warm = queries.len().min(batch);
    let mut sink = 0usize;
    for &(x, y) in &queries[..warm] {
        sink = sink.wrapping_add(f(x, y));
    }
    let mut per_batch = Vec::new();
    let mut total_ns = 0u128;
    for chunk in queries.chunks(batch.max(1)) {
        let start = Instant::now();
        for &(x, y) in chunk {
            sink = sink.wrapping_add(f(black_box(x), black_box(y)));
        }
        let ns = start.elapsed().as_nanos();
        total_ns += ns;
        per_batch.push(ns as f64 / chunk.len() as f64);
    }
    black_box(sink);
    per_batch.sort_by(f64::total_cmp);
    let p99 = per_batch[((per_batch.len() as f64 * 0.99).ceil() as usize).saturating_sub(1)];
    (total_ns as f64 / queries.len() as f64, p99)
}

/// Times the build and a shared random query stream for each structure.
pub fn run_bench(values: &[i64], cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if cfg.queries == 0 {
        return Err(Error::BadSpec("query count must be at least 1".into()));
    }
    let seq = DiffSequence::new(values.to_vec())?;
    let n = seq.len();
    let queries = random_nontrivial_queries(values, cfg.queries, cfg.seed);
    let mut records = Vec::new();
    for &kind in &cfg.structures {
        let input = seq.clone();
        let record = match kind {
            StructureKind::OneLevel => {
                let start = Instant::now();
                let fl = OneLevel::build(input, cfg.kappa);
                let build_ns = start.elapsed().as_nanos();
                let (mean, p99) = time_queries(&queries, cfg.batch, |x, y| fl.fl_index(x, y));
                BenchRecord {
                    structure_name: kind.name(),
                    n,
                    kappa: cfg.kappa.get(),
                    build_ns,
                    mean_query_ns: mean,
                    p99_query_ns: p99,
                    entries: SpaceReport::of(&fl).total_ladder_entries,
                    bytes: fl.heap_bytes(),
                    seed: cfg.seed,
                }
            }
            StructureKind::Doubling => {
                let start = Instant::now();
                let b = DoublingFl::build(input);
                let build_ns = start.elapsed().as_nanos();
                let (mean, p99) = time_queries(&queries, cfg.batch, |x, y| b.query(x, y));
                BenchRecord {
                    structure_name: kind.name(),
                    n,
                    kappa: cfg.kappa.get(),
                    build_ns,
                    mean_query_ns: mean,
                    p99_query_ns: p99,
                    entries: b.entries(),
                    bytes: b.heap_bytes(),
                    seed: cfg.seed,
                }
            }
            StructureKind::Naive => {
                let start = Instant::now();
                let plain = black_box(input.into_values());
                let build_ns = start.elapsed().as_nanos();
                let (mean, p99) = time_queries(&queries, cfg.batch, |x, y| naive_fl(&plain, x, y));
                BenchRecord {
                    structure_name: kind.name(),
                    n,
                    kappa: cfg.kappa.get(),
                    build_ns,
                    mean_query_ns: mean,
                    p99_query_ns: p99,
                    entries: 0,
                    bytes: plain.len() * std::mem::size_of::<i64>(),
                    seed: cfg.seed,
                }
            }
        };
        records.push(record);
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::gen::generate_sequence;

    #[test]
    fn header_literal() {
        assert_eq!(
            to_csv(&[]),
            "structure_name,n,kappa,build_ns,mean_query_ns,p99_query_ns,entries,bytes,seed\n"
        );
    }

    #[test]
    fn queries_are_nontrivial_and_reproducible() {
        let v = generate_sequence(2000, 5, 0.0);
        let y_max = *v.iter().max().unwrap();
        let q = random_nontrivial_queries(&v, 5000, 11);
        assert!(q.iter().all(|&(x, y)| v[x as usize] < y && y <= y_max));
        assert_eq!(q, random_nontrivial_queries(&v, 5000, 11));
        let flat = random_nontrivial_queries(&[3, 3, 3], 10, 0);
        assert!(flat.iter().all(|&(_, y)| y == 3));
    }

    #[test]
    fn records_per_structure() {
        let v = generate_sequence(5000, 2, 0.0);
        let cfg = BenchConfig {
            structures: StructureKind::parse_list("onelevel,doubling,naive").unwrap(),
            queries: 2000,
            batch: 500,
            ..BenchConfig::default()
        };
        let recs = run_bench(&v, &cfg).unwrap();
        let names: Vec<_> = recs.iter().map(|r| r.structure_name).collect();
        assert_eq!(names, vec!["onelevel", "doubling", "naive"]);
        assert!(recs[0].entries <= 10 * v.len());
        let levels = DoublingFl::build(DiffSequence::new(v.clone()).unwrap()).levels();
        assert_eq!(recs[1].entries, v.len() * levels);
        assert!(recs.iter().all(|r| r.mean_query_ns >= 0.0 && r.p99_query_ns >= 0.0));
        let csv = to_csv(&recs);
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.lines().nth(1).unwrap().starts_with("onelevel,5000,5,"));
    }

    #[test]
    fn bad_structure_name() {
        assert!(StructureKind::parse_list("onelevel,fast").is_err());
    }
}
