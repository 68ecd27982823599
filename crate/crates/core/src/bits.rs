//! Power-of-two helpers used by the query and jump computations.

/// Largest power of 2 not exceeding `x`. Requires `x >= 1`.
#[inline(always)]
pub fn ffloor(x: usize) -> usize {
    debug_assert!(x >= 1, "ffloor(0) is undefined");
    1 << (usize::BITS - 1 - x.leading_zeros())
}

/// Largest power of 2 dividing `x`. Requires `x >= 1`.
#[inline(always)]
pub fn pi_of(x: usize) -> usize {
    debug_assert!(x >= 1, "pi_of(0) is undefined");
    1 << x.trailing_zeros()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ffloor_examples() {
        assert_eq!(ffloor(1), 1);
        assert_eq!(ffloor(5), 4);
        assert_eq!(ffloor(8), 8);
        assert_eq!(ffloor(usize::MAX), 1 << (usize::BITS - 1));
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_of(1), 1);
        assert_eq!(pi_of(12), 4);
        assert_eq!(pi_of(8), 8);
    }

    #[test]
    fn against_loops() {
        for x in 1..5000usize {
            let mut f = 1;
            while f * 2 <= x {
                f *= 2;
            }
            assert_eq!(ffloor(x), f, "ffloor({x})");
            let mut p = 1;
            while x % (p * 2) == 0 {
                p *= 2;
            }
            assert_eq!(pi_of(x), p, "pi_of({x})");
        }
    }

    #[test]
    #[should_panic]
    #[cfg(debug_assertions)]
    fn pi_of_zero_panics() {
        pi_of(0);
    }
}
