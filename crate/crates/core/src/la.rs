//! Level-ancestor queries: the ancestor of `v` at depth `d` is the node at
//! the first position at or after `first_pos[v]` whose tour depth is `<= d`.

use crate::error::{Error, Result};
use crate::euler::EulerTour;
use crate::fl::{FindSmaller, Kappa};
use crate::seq::DiffSequence;
use crate::tree::Tree;

#[derive(Debug, Clone)]
pub struct LaIndex {
    tour: EulerTour,
    fs: FindSmaller<i64>,
}

impl LaIndex {
    pub fn build(tree: &Tree, kappa: Kappa) -> Self {
        let tour = EulerTour::new(tree);
        let seq = DiffSequence::new(tour.depths.clone()).expect("tour depths step by one");
        let fs = FindSmaller::build(&seq, kappa).expect("depths are non-negative");
        LaIndex { tour, fs }
    }

    /// Ancestor of `v` at depth `d`, for `0 <= d <= depth(v)`.
    #[inline]
    pub fn la_query(&self, v: usize, d: i64) -> Result<usize> {
        let depth = *self.tour.depth.get(v).ok_or(Error::UnknownNode(v))?;
        if d < 0 || d as usize > depth {
            return Err(Error::DepthOutOfRange { node: v, d, depth });
        }
        let j = self.fs.fs_index(self.tour.first_pos[v] as i64, d);
        // the root's depth 0 closes the tour, so j is always found
        debug_assert!(j < self.tour.len());
        Ok(self.tour.nodes[j])
    }

    pub fn depth(&self, v: usize) -> Option<usize> {
        self.tour.depth.get(v).copied()
    }

    pub fn tour(&self) -> &EulerTour {
        &self.tour
    }

    pub fn fs(&self) -> &FindSmaller<i64> {
        &self.fs
    }

    pub fn kappa(&self) -> Kappa {
        self.fs.negated().kappa()
    }

    pub fn len(&self) -> usize {
        self.tour.depth.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// See [`LaIndex::build`].
pub fn build_la(tree: &Tree, kappa: usize) -> Result<LaIndex> {
    Ok(LaIndex::build(tree, Kappa::new(kappa)?))
}
