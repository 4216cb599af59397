//! Checked integer helpers. Every operation that can overflow returns
//! [`Error::Overflow`] instead of wrapping.

use crate::error::{Error, Result};

#[inline]
pub(crate) fn add(x: i64, y: i64) -> Result<i64> {
    x.checked_add(y).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn sub(x: i64, y: i64) -> Result<i64> {
    x.checked_sub(y).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn mul(x: i64, y: i64) -> Result<i64> {
    x.checked_mul(y).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn square(x: i64) -> Result<i64> {
    mul(x, x)
}

/// Greatest common divisor of two integers, always non-negative.
pub fn gcd(x: i64, y: i64) -> i64 {
    let (mut x, mut y) = (x.unsigned_abs(), y.unsigned_abs());
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x as i64
}

/// Greatest common divisor of three integers.
pub fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    gcd(gcd(a, b), c)
}

/// Integer square root `⌊√n⌋`.
pub fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

/// Returns `Some(r)` when `n == r * r`.
pub fn exact_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = isqrt(n as u64) as i64;
    (r * r == n).then_some(r)
}

/// Tracks `⌊√q⌋` for a slowly varying `q`.
///
/// Each [`SqrtTracker::update`] moves the root one step at a time, so a
/// sweep whose root changes by `k` in total costs `O(k)` beyond the
/// initial seed. The result is exact at every step.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SqrtTracker {
    root: u64,
}

impl SqrtTracker {
    pub(crate) fn new(q: u64) -> Self {
        Self { root: isqrt(q) }
    }

    /// Re-targets the tracker to `q` and returns `⌊√q⌋`.
    #[inline]
    pub(crate) fn update(&mut self, q: u64) -> u64 {
        while self.root * self.root > q {
            self.root -= 1;
        }
        while (self.root + 1) * (self.root + 1) <= q {
            self.root += 1;
        }
        self.root
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_brackets_every_small_integer() {
        for x in 0..1_000_000u64 {
            let r = isqrt(x);
            assert!(r * r <= x, "isqrt({x}) = {r} too large");
            assert!((r + 1) * (r + 1) > x, "isqrt({x}) = {r} too small");
        }
    }

    #[test]
    fn isqrt_near_perfect_squares() {
        for r in [1u64, 2, 1000, 65_535, 3_037_000_499] {
            assert_eq!(isqrt(r * r), r);
            assert_eq!(isqrt(r * r - 1), r - 1);
            assert_eq!(isqrt(r * r + 1), r);
        }
        assert_eq!(isqrt(u64::MAX), 4_294_967_295);
    }

    #[test]
    fn exact_sqrt_detects_squares() {
        assert_eq!(exact_sqrt(49), Some(7));
        assert_eq!(exact_sqrt(48), None);
        assert_eq!(exact_sqrt(0), Some(0));
        assert_eq!(exact_sqrt(-4), None);
    }

    #[test]
    fn gcd3_examples() {
        assert_eq!(gcd3(7, 8, 5), 1);
        assert_eq!(gcd3(6, 6, 6), 6);
        assert_eq!(gcd3(21, 9, 15), 3);
    }

    #[test]
    fn tracker_matches_isqrt_in_both_directions() {
        let qs: Vec<u64> = (0..500).chain((0..500).rev()).map(|x| x * x / 3 + x).collect();
        let mut t = SqrtTracker::new(qs[0]);
        for q in qs {
            assert_eq!(t.update(q), isqrt(q));
        }
    }

    #[test]
    fn checked_ops_fail_loudly() {
        assert_eq!(mul(i64::MAX, 2), Err(Error::Overflow));
        assert_eq!(add(i64::MAX, 1), Err(Error::Overflow));
        assert_eq!(sub(i64::MIN, 1), Err(Error::Overflow));
        assert_eq!(square(3_037_000_500), Err(Error::Overflow));
    }
}
