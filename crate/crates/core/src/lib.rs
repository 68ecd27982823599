//! One-level find-larger structure.
//!
//! Preprocesses a 1-difference integer sequence in linear time so that
//! find-larger (`FL`) and find-smaller (`FS`) queries run in constant time,
//! and builds level-ancestor queries on rooted trees on top of that through
//! the Euler-tour depth sequence.
//!
//! The structures are generic over the sequence's signed integer type; the
//! aliases at the crate root fix the common choices.
//!
//! ```
//! use onelevel::{DiffSequence, Kappa, OneLevelFl};
//!
//! let seq = DiffSequence::new(vec![1i64, 0, 1, 2, 1, 2]).unwrap();
//! let fl = OneLevelFl::build(seq, Kappa::DEFAULT);
//! assert_eq!(fl.fl_index(0, 2), 3);
//! assert_eq!(fl.fl_index(0, 3), 6); // bottom is encoded as n
//! ```

pub mod baseline;
pub mod bits;
pub mod cli;
pub mod error;
pub mod euler;
pub mod fl;
pub mod la;
pub mod level;
pub mod oracle;
pub mod seq;
pub mod space;
pub mod text;
pub mod tree;
pub mod valley;

pub use baseline::DoublingFl;
pub use error::{Error, Result, TreeError};
pub use euler::EulerTour;
pub use fl::{Answer, BuildStats, FindSmaller, Kappa, OneLevel, QueryTrace};
pub use la::LaIndex;
pub use level::Level;
pub use seq::DiffSequence;
pub use space::SpaceReport;
pub use tree::Tree;
pub use valley::{compute_valleys, ValleyFrame};

/// One-level structure over 64-bit values.
pub type OneLevelFl = OneLevel<i64>;
/// One-level structure over 32-bit values.
pub type OneLevelFl32 = OneLevel<i32>;
/// Find-smaller adapter over 64-bit values.
pub type FindSmallerFl = FindSmaller<i64>;
/// Doubling baseline over 64-bit values.
pub type DoublingFl64 = DoublingFl<i64>;
/// 64-bit 1-difference sequence.
pub type DiffSequence64 = DiffSequence<i64>;
