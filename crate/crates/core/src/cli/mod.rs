//! Command implementations behind the `onelevel` binary. Each command is a
//! plain function so tests can drive it without a process.

pub mod bench;
pub mod gen;
pub mod inspect;
pub mod verify;

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::text::parse_sequence;
use crate::tree::{parse_balanced_parens, parse_parent_array, Tree};

pub use bench::{run_bench, BenchConfig, BenchRecord, StructureKind, CSV_HEADER};
pub use gen::{cmd_gen, GenKind, GenSpec};
pub use inspect::cmd_inspect;
pub use verify::{cmd_verify, VerifyMode, VerifyReport};

/// Input text formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Seq,
    Parent,
    Parens,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "seq" => Ok(Format::Seq),
            "parent" => Ok(Format::Parent),
            "parens" => Ok(Format::Parens),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// A parsed input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Sequence(Vec<i64>),
    Tree(Tree),
}

impl Input {
    pub fn parse(text: &str, format: Format) -> Result<Self> {
        Ok(match format {
            Format::Seq => Input::Sequence(parse_sequence(text)?),
            Format::Parent => Input::Tree(parse_parent_array(text)?),
            Format::Parens => Input::Tree(parse_balanced_parens(text)?),
        })
    }

    /// The sequence itself, or for a tree the negated Euler-tour depths
    /// that its level-ancestor index searches.
    pub fn search_sequence(&self) -> Vec<i64> {
        match self {
            Input::Sequence(v) => v.clone(),
            Input::Tree(t) => crate::euler::EulerTour::new(t)
                .depths
                .iter()
                .map(|d| -d)
                .collect(),
        }
    }
}
