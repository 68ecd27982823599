use crate::error::{Error, Result};
use crate::level::Level;

/// Largest supported length: positions and the bottom value `n` are stored
/// as `u32`.
pub const MAX_LEN: usize = u32::MAX as usize - 1;

/// A non-empty integer sequence whose adjacent values differ by at most 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiffSequence<T> {
    values: Vec<T>,
    min: T,
    max: T,
}

impl<T: Level> DiffSequence<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        let (&first, rest) = values.split_first().ok_or(Error::EmptySequence)?;
        if values.len() > MAX_LEN {
            return Err(Error::TooLong(values.len()));
        }
        let (mut min, mut max) = (first, first);
        let mut prev = first;
        for (i, &v) in rest.iter().enumerate() {
            let step = v.checked_sub(&prev).ok_or(Error::NotOneDifference(i + 1))?;
            if step.abs() > T::one() {
                return Err(Error::NotOneDifference(i + 1));
            }
            min = min.min(v);
            max = max.max(v);
            prev = v;
        }
        // queries subtract any two values in T
        max.checked_sub(&min).ok_or(Error::RangeOverflow)?;
        Ok(DiffSequence { values, min, max })
    }

    #[inline]
    pub fn values(&self) -> &[T] {
        &self.values
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always `false`; present for API symmetry with slices.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn min(&self) -> T {
        self.min
    }

    #[inline]
    pub fn max(&self) -> T {
        self.max
    }

    /// `max - min`.
    #[inline]
    pub fn span(&self) -> usize {
        self.max.offset_from(self.min)
    }

    /// Elementwise negation, which is again a 1-difference sequence.
    pub fn negated(&self) -> Result<Self> {
        let values = self
            .values
            .iter()
            .map(|v| v.checked_neg().ok_or(Error::RangeOverflow))
            .collect::<Result<Vec<T>>>()?;
        Ok(DiffSequence {
            values,
            min: self.max.neg(),
            max: self.min.neg(),
        })
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }
}

impl<T> AsRef<[T]> for DiffSequence<T> {
    fn as_ref(&self) -> &[T] {
        &self.values
    }
}

/// Checks the 1-difference property and wraps a copy of `values`.
pub fn validate_sequence<T: Level>(values: &[T]) -> Result<DiffSequence<T>> {
    DiffSequence::new(values.to_vec())
}
