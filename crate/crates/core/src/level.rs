use std::fmt::{Debug, Display};

use num_traits::{CheckedNeg, PrimInt, Signed};

/// Signed integer type usable as a sequence value.
///
/// Implemented for every primitive signed integer.
pub trait Level: PrimInt + Signed + CheckedNeg + Debug + Display + Send + Sync + 'static {
    /// `self - base` as an unsigned offset. Callers guarantee `self >= base`
    /// and that the difference is representable in `Self`.
    #[inline(always)]
    fn offset_from(self, base: Self) -> usize {
        (self - base).to_usize().expect("offset fits in usize")
    }
}

impl<T> Level for T where T: PrimInt + Signed + CheckedNeg + Debug + Display + Send + Sync + 'static {}
