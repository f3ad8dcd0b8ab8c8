//! Exact scalars and small combinatorial number helpers.
//!
//! Everything in this crate computes exactly: arbitrary-precision integers
//! ([`num::BigInt`], [`num::BigUint`]) and reduced rationals ([`Rational`]).
//! No floating point appears anywhere.

use num::{BigRational, BigUint, One, Zero};

/// Reduced arbitrary-precision rational, the scalar type of this crate.
///
/// Values are always stored reduced with a positive denominator. `Display`
/// prints `p/q`, or just `p` when the denominator is one, and `FromStr`
/// accepts both forms.
pub type Rational = BigRational;

/// `n/d` as a reduced [`Rational`].
///
/// Panics when `d` is zero.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Exact `n!`.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 1..=k {
        // Exact at every step: the partial product is divisible by i.
        result = result * BigUint::from(n - k + i) / BigUint::from(i);
    }
    result
}

/// `C(x, 2) = x(x - 1)/2`; zero for `x = 0`.
pub fn choose_two(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}
