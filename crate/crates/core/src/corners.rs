//! Corner profiles of shifted diagrams and the statistics built on them.
//!
//! An *outer corner* is a removable box; an *inner corner* is a concave spot
//! on the boundary where a box could be attached (including the head of a
//! would-be new row). Listing their contents from the bottom of the diagram
//! up gives sequences that interlace:
//!
//! ```text
//! x0 <= y1 < x1 < y2 < x2 < ... < ym < xm,    x0 = 1
//! ```
//!
//! with equality `x0 = y1 = 1` exactly when the last row has a single box;
//! then the new row is blocked and the two content-1 corners cancel in every
//! statistic below.
//!
//! Key items:
//! - [`CornerProfile`]: the interlacing content sequences with coordinates.
//! - [`power_sum`], [`power_sum_product`]: the statistics
//!   `q_k = sum C(x, 2)^k - sum C(y, 2)^k` and their products.
//! - [`add_box_transitions`]: the one-box growths with their weights.
//! - [`hook_product_ratio`]: closed form for `hook_product(lambda) /
//!   hook_product(grown lambda)` purely in corner contents.
//! - [`power_sum_shift`]: closed form for how `q_k` moves under one growth.

use thiserror::Error;

use crate::partition::{Partition, StrictPartition};
use crate::rational::{choose_two, int, Rational};
use num::BigInt;

/// Error for growth operations addressed by corner index.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransitionError {
    #[error("corner index {index} out of range: profile has inner corners 0..={m}")]
    IndexOutOfRange { index: usize, m: usize },
    #[error("no new row can be started: the last row has a single box")]
    NewRowBlocked,
}

/// The corner data of a shifted diagram.
///
/// Outer corners are indexed `1..=m` and inner corners `0..=m`, both ordered
/// bottom-up (equivalently, by increasing content). Index 0 is the head of
/// the would-be new row; its content is always 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerProfile {
    outer_coords: Vec<(u32, u32)>,
    inner_coords: Vec<(u32, u32)>,
    outer_contents: Vec<u32>,
    inner_contents: Vec<u32>,
}

impl CornerProfile {
    /// Number of outer corners.
    pub fn m(&self) -> usize {
        self.outer_contents.len()
    }

    /// `(row, col)` of each outer corner, bottom-up; empty iff the shape is
    /// empty.
    pub fn outer_coords(&self) -> &[(u32, u32)] {
        &self.outer_coords
    }

    /// `(row, col)` of each inner corner, bottom-up. The index-0 entry is the
    /// first cell of the would-be new row.
    pub fn inner_coords(&self) -> &[(u32, u32)] {
        &self.inner_coords
    }

    /// Contents `y1 < ... < ym` of the outer corners.
    pub fn outer_contents(&self) -> &[u32] {
        &self.outer_contents
    }

    /// Contents `x0 < x1 < ... < xm` of the inner corners; `x0 = 1`.
    pub fn inner_contents(&self) -> &[u32] {
        &self.inner_contents
    }

    /// Whether a box can be added at index 0 (a new row started). False
    /// exactly when the last row has a single box.
    pub fn new_row_allowed(&self) -> bool {
        self.outer_contents.first() != Some(&1)
    }

    /// `sum_i C(x_i, 2)^k - sum_j C(y_j, 2)^k`, always an integer.
    ///
    /// `k = 0` gives 1 (one more inner than outer corner, with `0^0 = 1` for
    /// the `C(x0, 2) = 0` term), and `k = 1` gives the number of boxes.
    pub fn power_sum(&self, k: u32) -> BigInt {
        let inner: BigInt = self
            .inner_contents
            .iter()
            .map(|&x| BigInt::from(choose_two(u64::from(x))).pow(k))
            .sum();
        let outer: BigInt = self
            .outer_contents
            .iter()
            .map(|&y| BigInt::from(choose_two(u64::from(y))).pow(k))
            .sum();
        inner - outer
    }

    fn check_interlacing(&self) -> bool {
        let xs = &self.inner_contents;
        let ys = &self.outer_contents;
        if xs.len() != ys.len() + 1 || xs[0] != 1 {
            return false;
        }
        (0..ys.len()).all(|j| {
            let lower_ok = if j == 0 {
                xs[0] <= ys[0]
            } else {
                xs[j] < ys[j]
            };
            lower_ok && ys[j] < xs[j + 1]
        })
    }
}

impl StrictPartition {
    /// Computes the corner profile of the shifted diagram.
    ///
    /// The empty partition has no outer corners and the single inner corner
    /// `(1, 2)` of content 1.
    pub fn corner_profile(&self) -> CornerProfile {
        let length = self.len();

        // Outer corners: rows whose last box is removable, bottom-up.
        let mut outer_coords = Vec::new();
        let mut outer_contents = Vec::new();
        for r in (1..=length).rev() {
            if r == length || self.part(r) - 1 > self.part(r + 1) {
                outer_coords.push((r as u32, (r + self.part(r) as usize) as u32));
                outer_contents.push(self.part(r));
            }
        }

        // Inner corners: the head of the would-be new row, then every row end
        // that can take one more box, bottom-up.
        let mut inner_coords = vec![((length + 1) as u32, (length + 2) as u32)];
        let mut inner_contents = vec![1u32];
        for r in (1..=length).rev() {
            if r == 1 || self.part(r - 1) > self.part(r) + 1 {
                inner_coords.push((r as u32, (r + self.part(r) as usize + 1) as u32));
                inner_contents.push(self.part(r) + 1);
            }
        }

        let profile = CornerProfile {
            outer_coords,
            inner_coords,
            outer_contents,
            inner_contents,
        };
        debug_assert!(
            profile.check_interlacing(),
            "corner profile of {self}: {profile:?}"
        );
        profile
    }
}

/// `q_k(lambda)` as a [`Rational`]: the inner-minus-outer power sum of
/// `C(content, 2)` over the corner profile.
pub fn power_sum(lambda: &StrictPartition, k: u32) -> Rational {
    Rational::from_integer(lambda.corner_profile().power_sum(k))
}

/// `q_nu(lambda)`: product over the parts `k` of `nu` of `q_k(lambda)`; one
/// for the empty `nu`.
pub fn power_sum_product(lambda: &StrictPartition, nu: &Partition) -> Rational {
    let profile = lambda.corner_profile();
    nu.parts()
        .iter()
        .map(|&k| Rational::from_integer(profile.power_sum(k)))
        .product()
}

/// One admissible growth of a shifted diagram: adding a box at inner corner
/// `index` produces `target`, whose added box has the given content.
///
/// `multiplicity` is the weight of the growth in the difference operator:
/// 1 for a new row (index 0), 2 for a box appended to an existing row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transition {
    pub index: usize,
    pub content: u32,
    pub target: StrictPartition,
    pub multiplicity: u32,
}

/// All one-box growths of `lambda` in corner order.
///
/// Index 0 (the new row) is present unless the last row has a single box;
/// indices `1..=m` append to existing rows and always exist.
pub fn add_box_transitions(lambda: &StrictPartition) -> Vec<Transition> {
    let profile = lambda.corner_profile();
    let xs = profile.inner_contents();
    let mut out = Vec::with_capacity(xs.len());

    if profile.new_row_allowed() {
        let mut parts = lambda.parts().to_vec();
        parts.push(1);
        out.push(Transition {
            index: 0,
            content: 1,
            target: StrictPartition::new(parts).expect("appending a 1 keeps strictness"),
            multiplicity: 1,
        });
    }
    for r in 1..=lambda.len() {
        let addable = r == 1 || lambda.part(r - 1) > lambda.part(r) + 1;
        if addable {
            let mut parts = lambda.parts().to_vec();
            parts[r - 1] += 1;
            let content = lambda.part(r) + 1;
            let index = xs
                .iter()
                .position(|&x| x == content)
                .expect("addable row end must be an inner corner");
            out.push(Transition {
                index,
                content,
                target: StrictPartition::new(parts).expect("addable row keeps strictness"),
                multiplicity: 2,
            });
        }
    }
    out.sort_by_key(|t| t.index);
    debug_assert!(out.iter().all(|t| xs[t.index] == t.content));
    out
}

/// Closed form for the ratio `hook_product(lambda) / hook_product(target)`
/// when a box is added at inner corner `index`, written purely in corner
/// contents through `a_i = C(x_i, 2)` and `b_j = C(y_j, 2)`:
///
/// ```text
/// index 0:      prod_j (a_0 - b_j)  /  prod_{j >= 1} (a_0 - a_j)
/// index i >= 1: (1/2) prod_j (a_i - b_j)  /  prod_{j != i} (a_i - a_j)
/// ```
pub fn hook_product_ratio(
    lambda: &StrictPartition,
    index: usize,
) -> Result<Rational, TransitionError> {
    let profile = lambda.corner_profile();
    validate_index(&profile, index)?;
    let a: Vec<i64> = profile
        .inner_contents()
        .iter()
        .map(|&x| choose_two(u64::from(x)) as i64)
        .collect();
    let b: Vec<i64> = profile
        .outer_contents()
        .iter()
        .map(|&y| choose_two(u64::from(y)) as i64)
        .collect();

    let numerator: Rational = b.iter().map(|&bj| int(a[index] - bj)).product();
    let denominator: Rational = a
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != index && j != 0)
        .map(|(_, &aj)| int(a[index] - aj))
        .product();
    let mut ratio = numerator / denominator;
    if index >= 1 {
        // The excluded j = 0 factor belongs to the denominator for i >= 1.
        ratio = ratio / int(a[index] - a[0]) / int(2);
    }
    Ok(ratio)
}

/// Closed form for `q_k(target) - q_k(lambda)` when a box is added at inner
/// corner `index`: with `x = x_index`,
///
/// ```text
/// C(x+1, 2)^k + C(x-1, 2)^k - 2 C(x, 2)^k
/// ```
pub fn power_sum_shift(
    lambda: &StrictPartition,
    index: usize,
    k: u32,
) -> Result<Rational, TransitionError> {
    let profile = lambda.corner_profile();
    validate_index(&profile, index)?;
    let x = u64::from(profile.inner_contents()[index]);
    let up = BigInt::from(choose_two(x + 1)).pow(k);
    let down = BigInt::from(choose_two(x - 1)).pow(k);
    let here = BigInt::from(choose_two(x)).pow(k);
    Ok(Rational::from_integer(up + down - BigInt::from(2) * here))
}

fn validate_index(profile: &CornerProfile, index: usize) -> Result<(), TransitionError> {
    if index > profile.m() {
        return Err(TransitionError::IndexOutOfRange {
            index,
            m: profile.m(),
        });
    }
    if index == 0 && !profile.new_row_allowed() {
        return Err(TransitionError::NewRowBlocked);
    }
    Ok(())
}

/// Sum over all growths of weight times hook-product ratio; always exactly 1.
/// This is what makes the reciprocal hook product a fixed point of the
/// difference operator. Exposed for tests and sanity sweeps.
pub fn weighted_ratio_sum(lambda: &StrictPartition) -> Rational {
    add_box_transitions(lambda)
        .iter()
        .map(|t| {
            int(i64::from(t.multiplicity))
                * hook_product_ratio(lambda, t.index).expect("transition index is valid")
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::strict_partitions;
    use crate::rational::ratio;

    fn sp(text: &str) -> StrictPartition {
        text.parse().unwrap()
    }

    #[test]
    fn profile_of_worked_example() {
        let profile = sp("7,5,4,1").corner_profile();
        assert_eq!(profile.m(), 3);
        assert_eq!(profile.outer_contents(), &[1, 4, 7]);
        assert_eq!(profile.inner_contents(), &[1, 2, 6, 8]);
        assert_eq!(profile.outer_coords(), &[(4, 5), (3, 7), (1, 8)]);
        assert_eq!(profile.inner_coords(), &[(5, 6), (4, 6), (2, 8), (1, 9)]);
        assert!(!profile.new_row_allowed());
    }

    #[test]
    fn profile_of_tiny_shapes() {
        let empty = StrictPartition::empty().corner_profile();
        assert_eq!(empty.m(), 0);
        assert_eq!(empty.inner_contents(), &[1]);
        assert_eq!(empty.inner_coords(), &[(1, 2)]);
        assert!(empty.new_row_allowed());

        let two = sp("2").corner_profile();
        assert_eq!(two.outer_contents(), &[2]);
        assert_eq!(two.inner_contents(), &[1, 3]);
        assert!(two.new_row_allowed());

        let stair = sp("2,1").corner_profile();
        assert_eq!(stair.outer_contents(), &[1]);
        assert_eq!(stair.inner_contents(), &[1, 3]);
        assert!(!stair.new_row_allowed());
    }

    #[test]
    fn interlacing_holds_on_a_sweep() {
        for n in 0..=11 {
            for lambda in strict_partitions(n) {
                let profile = lambda.corner_profile();
                assert!(profile.check_interlacing(), "lambda = {lambda}");
                // Equality at the bottom iff the last row is a single box.
                let tight = profile.m() > 0 && profile.outer_contents()[0] == 1;
                assert_eq!(tight, lambda.part(lambda.len()) == 1, "lambda = {lambda}");
            }
        }
    }

    #[test]
    fn power_sums_of_small_shapes() {
        assert_eq!(power_sum(&sp("1"), 2), int(1));
        assert_eq!(power_sum(&sp("2"), 2), int(8));
        assert_eq!(power_sum(&sp("3"), 2), int(27));
        assert_eq!(power_sum(&sp("7,5,4,1"), 1), int(17));
    }

    #[test]
    fn power_sum_zero_is_one_and_one_is_size() {
        for n in 0..=11 {
            for lambda in strict_partitions(n) {
                assert_eq!(power_sum(&lambda, 0), int(1), "lambda = {lambda}");
                assert_eq!(
                    power_sum(&lambda, 1),
                    int(lambda.size() as i64),
                    "lambda = {lambda}"
                );
            }
        }
    }

    #[test]
    fn power_sum_product_multiplies_parts() {
        let lambda = sp("3,1");
        let nu: Partition = "2,1,1".parse().unwrap();
        assert_eq!(
            power_sum_product(&lambda, &nu),
            power_sum(&lambda, 2) * power_sum(&lambda, 1) * power_sum(&lambda, 1)
        );
        assert_eq!(power_sum_product(&lambda, &Partition::empty()), int(1));
    }

    #[test]
    fn transitions_of_small_shapes() {
        let of = |text: &str| {
            add_box_transitions(&sp(text))
                .iter()
                .map(|t| (t.index, t.content, t.target.to_string(), t.multiplicity))
                .collect::<Vec<_>>()
        };
        assert_eq!(of("-"), vec![(0, 1, "1".to_string(), 1)]);
        assert_eq!(
            of("2"),
            vec![(0, 1, "2,1".to_string(), 1), (1, 3, "3".to_string(), 2)]
        );
        assert_eq!(of("2,1"), vec![(1, 3, "3,1".to_string(), 2)]);
        assert_eq!(
            of("7,5,4,1"),
            vec![
                (1, 2, "7,5,4,2".to_string(), 2),
                (2, 6, "7,6,4,1".to_string(), 2),
                (3, 8, "8,5,4,1".to_string(), 2),
            ]
        );
    }

    #[test]
    fn transitions_agree_with_validity_brute_force() {
        // Independent route: try incrementing every row and appending a row,
        // keep whatever validates, and compare target sets.
        for n in 0..=10 {
            for lambda in strict_partitions(n) {
                let mut brute = Vec::new();
                for r in 0..=lambda.len() {
                    let mut parts = lambda.parts().to_vec();
                    if r < lambda.len() {
                        parts[r] += 1;
                    } else {
                        parts.push(1);
                    }
                    if let Ok(target) = StrictPartition::new(parts) {
                        brute.push(target);
                    }
                }
                brute.sort();
                let mut listed: Vec<StrictPartition> = add_box_transitions(&lambda)
                    .into_iter()
                    .map(|t| t.target)
                    .collect();
                listed.sort();
                assert_eq!(listed, brute, "lambda = {lambda}");
            }
        }
    }

    #[test]
    fn hook_ratio_closed_form_matches_direct_quotient() {
        for n in 0..=10 {
            for lambda in strict_partitions(n) {
                let h_lambda = Rational::from_integer(lambda.hook_product().into());
                for t in add_box_transitions(&lambda) {
                    let h_target = Rational::from_integer(t.target.hook_product().into());
                    assert_eq!(
                        hook_product_ratio(&lambda, t.index).unwrap(),
                        h_lambda.clone() / h_target,
                        "lambda = {lambda}, index = {}",
                        t.index
                    );
                }
            }
        }
    }

    #[test]
    fn hook_ratio_values_of_tiny_shapes() {
        assert_eq!(
            hook_product_ratio(&StrictPartition::empty(), 0).unwrap(),
            int(1)
        );
        assert_eq!(hook_product_ratio(&sp("1"), 1).unwrap(), ratio(1, 2));
        assert_eq!(hook_product_ratio(&sp("2"), 0).unwrap(), ratio(1, 3));
    }

    #[test]
    fn invalid_indices_are_rejected() {
        assert_eq!(
            hook_product_ratio(&sp("2,1"), 0),
            Err(TransitionError::NewRowBlocked)
        );
        assert_eq!(
            hook_product_ratio(&sp("2"), 2),
            Err(TransitionError::IndexOutOfRange { index: 2, m: 1 })
        );
        assert_eq!(
            power_sum_shift(&sp("2,1"), 0, 1),
            Err(TransitionError::NewRowBlocked)
        );
    }

    #[test]
    fn power_sum_shift_matches_direct_difference() {
        for n in 0..=10 {
            for lambda in strict_partitions(n) {
                for t in add_box_transitions(&lambda) {
                    for k in 0..=4 {
                        assert_eq!(
                            power_sum_shift(&lambda, t.index, k).unwrap(),
                            power_sum(&t.target, k) - power_sum(&lambda, k),
                            "lambda = {lambda}, index = {}, k = {k}",
                            t.index
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn power_sum_shift_value_for_single_row() {
        // Growing 2 -> 3 at index 1 moves q_2 from 8 to 27.
        assert_eq!(power_sum_shift(&sp("2"), 1, 2).unwrap(), int(19));
    }

    #[test]
    fn weighted_ratios_sum_to_one() {
        for n in 0..=11 {
            for lambda in strict_partitions(n) {
                assert_eq!(weighted_ratio_sum(&lambda), int(1), "lambda = {lambda}");
            }
        }
    }
}
