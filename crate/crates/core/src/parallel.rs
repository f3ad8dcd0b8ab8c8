//! Parallel reduction helpers for exact-arithmetic sweeps.
//!
//! [`sum_with`] fans a slice out across threads when the `parallel` feature
//! (on by default) is enabled, and otherwise falls back to the sequential
//! loop. Summation of exact rationals is associative and commutative, so both
//! paths produce identical results; [`sum_sequential`] stays available either
//! way for direct comparison.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use num::Zero;

use crate::rational::Rational;

/// Maps `value` over `items` and sums exactly, in parallel when the
/// `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn sum_with<T, F>(items: &[T], value: F) -> Rational
where
    T: Sync,
    F: Fn(&T) -> Rational + Send + Sync,
{
    items
        .par_iter()
        .map(value)
        .reduce(Rational::zero, |left, right| left + right)
}

/// Maps `value` over `items` and sums exactly; sequential build.
#[cfg(not(feature = "parallel"))]
pub fn sum_with<T, F>(items: &[T], value: F) -> Rational
where
    T: Sync,
    F: Fn(&T) -> Rational + Send + Sync,
{
    sum_sequential(items, value)
}

/// The plain sequential loop behind [`sum_with`]'s fallback.
pub fn sum_sequential<T, F>(items: &[T], value: F) -> Rational
where
    F: Fn(&T) -> Rational,
{
    items.iter().map(value).sum()
}
