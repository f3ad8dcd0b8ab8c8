//! Counting standard shifted tableaux, straight and skew.
//!
//! Three independent routes are provided on purpose:
//! - [`count_standard`]: the hook-product formula `n! / hook_product`.
//! - [`count_skew`] / [`SkewCounter`]: memoized last-box removal recursion.
//! - [`count_by_backtracking`]: direct enumeration of all fillings, capped,
//!   used as an oracle for the other two.
//!
//! [`scaled_count`] applies the power-of-two weight
//! `2^(size difference - length difference)` that turns skew tableau counts
//! into the weights appearing in hook-product summations.

use std::collections::HashMap;

use num::{BigUint, One, Zero};
use thiserror::Error;

use crate::partition::{SkewShape, StrictPartition};
use crate::rational::factorial;

/// Largest skew size [`count_by_backtracking`] accepts by default.
pub const BRUTE_FORCE_CAP: u64 = 12;

/// Error from [`count_by_backtracking`] when the shape is too large to
/// enumerate cell by cell.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("shape has {size} boxes, above the brute-force cap of {cap}")]
pub struct CapExceeded {
    pub size: u64,
    pub cap: u64,
}

/// Number of standard shifted tableaux of straight shape, via the hook
/// product: `size! / hook_product`.
///
/// The division is checked to be exact, which it always is for valid shapes.
pub fn count_standard(lambda: &StrictPartition) -> BigUint {
    let numerator = factorial(lambda.size());
    let hooks = lambda.hook_product();
    let (quotient, remainder) = num::Integer::div_rem(&numerator, &hooks);
    assert!(
        remainder.is_zero(),
        "hook product of {lambda} does not divide {}!",
        lambda.size()
    );
    quotient
}

/// Number of standard shifted tableaux of skew shape.
///
/// Uses a fresh [`SkewCounter`]; prefer reusing one counter across a sweep.
pub fn count_skew(shape: &SkewShape) -> BigUint {
    SkewCounter::new().count(shape)
}

/// Skew tableau counts weighted by `2^((size - length) difference)`:
///
/// ```text
/// scaled = 2^(|outer| - |inner| - len(outer) + len(inner)) * count_skew
/// ```
pub fn scaled_count(shape: &SkewShape) -> BigUint {
    let boxes = shape.size();
    let rows = (shape.outer().len() - shape.inner().len()) as u64;
    count_skew(shape) << (boxes - rows)
}

/// Memoized counter for standard shifted skew tableaux.
///
/// Counts satisfy the removal recursion: the largest entry of any standard
/// filling sits in a removable box, so the count for `outer/inner` is the sum
/// over one-box removals of `outer` that still contain `inner`. The base case
/// `lambda/lambda` counts the single empty filling.
pub struct SkewCounter {
    memo: HashMap<(StrictPartition, StrictPartition), BigUint>,
}

impl SkewCounter {
    pub fn new() -> Self {
        SkewCounter {
            memo: HashMap::new(),
        }
    }

    pub fn count(&mut self, shape: &SkewShape) -> BigUint {
        self.count_parts(shape.outer(), shape.inner())
    }

    fn count_parts(&mut self, outer: &StrictPartition, inner: &StrictPartition) -> BigUint {
        if outer == inner {
            return BigUint::one();
        }
        let key = (outer.clone(), inner.clone());
        if let Some(known) = self.memo.get(&key) {
            return known.clone();
        }
        let total: BigUint = outer
            .one_box_removals()
            .into_iter()
            .filter(|smaller| smaller.contains(inner))
            .map(|smaller| self.count_parts(&smaller, inner))
            .sum();
        self.memo.insert(key, total.clone());
        total
    }
}

impl Default for SkewCounter {
    fn default() -> Self {
        SkewCounter::new()
    }
}

/// Counts standard fillings of the skew shape directly, placing the values
/// `1, 2, ...` one at a time into cells whose left and upper neighbours are
/// already filled (or absent).
///
/// Exponential in the number of boxes; refuses shapes larger than `cap`.
pub fn count_by_backtracking(shape: &SkewShape, cap: u64) -> Result<BigUint, CapExceeded> {
    let size = shape.size();
    if size > cap {
        return Err(CapExceeded { size, cap });
    }

    // Cells of the skew shape in diagram coordinates, with an index lookup.
    let outer = shape.outer();
    let inner = shape.inner();
    let mut cells = Vec::new();
    for row in 1..=outer.len() {
        let lo = inner.part(row) as usize; // columns row+1 ..= row+lo are inner
        for col in (row + 1 + lo)..=(row + outer.part(row) as usize) {
            cells.push((row, col));
        }
    }
    let index_of: HashMap<(usize, usize), usize> = cells
        .iter()
        .enumerate()
        .map(|(idx, &cell)| (cell, idx))
        .collect();

    fn go(
        cells: &[(usize, usize)],
        index_of: &HashMap<(usize, usize), usize>,
        filled: &mut [bool],
        left: usize,
    ) -> BigUint {
        if left == 0 {
            return BigUint::one();
        }
        let mut total = BigUint::zero();
        for (idx, &(row, col)) in cells.iter().enumerate() {
            if filled[idx] {
                continue;
            }
            let blocked = |r: usize, c: usize| match index_of.get(&(r, c)) {
                Some(&neighbour) => !filled[neighbour],
                None => false, // outside the skew shape counts as filled
            };
            if blocked(row, col - 1) || (row > 1 && blocked(row - 1, col)) {
                continue;
            }
            filled[idx] = true;
            total += go(cells, index_of, filled, left - 1);
            filled[idx] = false;
        }
        total
    }

    let mut filled = vec![false; cells.len()];
    Ok(go(&cells, &index_of, &mut filled, cells.len()))
}
