//! Partial-fraction kernels on interlacing point data, and the expansion of
//! their moments in power-sum statistics.
//!
//! A [`RationalPoint`] abstracts the corner data of a diagram: nodes
//! `a_0, ..., a_m` (from inner corners) and `b_1, ..., b_m` (from outer
//! corners), all exact rationals. The kernel weight at node `i` is
//!
//! ```text
//! w_i = prod_j (a_i - b_j) / prod_{j != i} (a_i - a_j)
//! ```
//!
//! Weights sum to 1, and the `k`-th moment `sum_i w_i a_i^k` is a universal
//! polynomial in the power sums `q_j = sum a^j - sum b^j`, independent of
//! `m`. [`moment_expansion`] computes that polynomial as a coefficient table;
//! [`reconstruct_moment`] evaluates it back at a point, giving the dual route
//! checked against [`RationalPoint::moment`].

use std::collections::BTreeMap;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::partition::{Partition, StrictPartition};
use crate::rational::{choose_two, int, ratio, Rational};

/// Ways a point can fail validation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PointError {
    #[error("need one more a-node than b-nodes, got {a_len} and {b_len}")]
    ArityMismatch { a_len: usize, b_len: usize },
    #[error("a-nodes must be pairwise distinct, {node} repeats")]
    RepeatedNode { node: String },
}

/// Exact evaluation point for the partial-fraction kernel: `m + 1` pairwise
/// distinct nodes `a` and `m` nodes `b`, each kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint {
    a: Vec<Rational>,
    b: Vec<Rational>,
}

impl RationalPoint {
    /// Validates arity (`a` one longer than `b`) and distinctness of `a`.
    /// Both node lists are sorted; `b` nodes may repeat.
    pub fn new(mut a: Vec<Rational>, mut b: Vec<Rational>) -> Result<Self, PointError> {
        if a.len() != b.len() + 1 {
            return Err(PointError::ArityMismatch {
                a_len: a.len(),
                b_len: b.len(),
            });
        }
        a.sort();
        b.sort();
        if let Some(pair) = a.windows(2).find(|w| w[0] == w[1]) {
            return Err(PointError::RepeatedNode {
                node: pair[0].to_string(),
            });
        }
        Ok(RationalPoint { a, b })
    }

    /// The point carrying the corner data of a shifted diagram:
    /// `a_i = C(x_i, 2)` over inner corners, `b_j = C(y_j, 2)` over outer
    /// corners.
    pub fn from_partition(lambda: &StrictPartition) -> Self {
        let profile = lambda.corner_profile();
        let to_node = |&c: &u32| int(choose_two(u64::from(c)) as i64);
        let a = profile.inner_contents().iter().map(to_node).collect();
        let b = profile.outer_contents().iter().map(to_node).collect();
        RationalPoint::new(a, b).expect("interlacing corner contents give distinct nodes")
    }

    /// Number of `b`-nodes.
    pub fn m(&self) -> usize {
        self.b.len()
    }

    pub fn a_nodes(&self) -> &[Rational] {
        &self.a
    }

    pub fn b_nodes(&self) -> &[Rational] {
        &self.b
    }

    /// Kernel weight at node `i`:
    /// `prod_j (a_i - b_j) / prod_{j != i} (a_i - a_j)`.
    pub fn kernel_weight(&self, i: usize) -> Rational {
        assert!(i < self.a.len(), "node index {i} out of range");
        let numerator: Rational = self.b.iter().map(|bj| &self.a[i] - bj).product();
        let denominator: Rational = self
            .a
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, aj)| &self.a[i] - aj)
            .product();
        numerator / denominator
    }

    /// `k`-th kernel moment `sum_i w_i a_i^k`; the zeroth moment is always 1.
    pub fn moment(&self, k: u32) -> Rational {
        (0..self.a.len())
            .map(|i| self.kernel_weight(i) * pow(&self.a[i], k))
            .sum()
    }

    /// Power sum `q_k = sum_i a_i^k - sum_j b_j^k` (with `0^0 = 1`, so
    /// `q_0 = 1`).
    pub fn power_sum(&self, k: u32) -> Rational {
        let a: Rational = self.a.iter().map(|v| pow(v, k)).sum();
        let b: Rational = self.b.iter().map(|v| pow(v, k)).sum();
        a - b
    }

    /// `q_nu = prod over parts k of nu of q_k`; one for the empty `nu`.
    pub fn power_sum_product(&self, nu: &Partition) -> Rational {
        nu.parts().iter().map(|&k| self.power_sum(k)).product()
    }
}

fn pow(base: &Rational, k: u32) -> Rational {
    let mut out = Rational::one();
    for _ in 0..k {
        out *= base;
    }
    out
}

/// Coefficients of a polynomial in the power sums `q_j`, keyed by the
/// multiset of indices: the entry `(2,1,1) -> c` stands for
/// `c * q_2 * q_1 * q_1`.
pub type CoefficientTable = BTreeMap<Partition, Rational>;

/// Universal expansion of the `k`-th kernel moment in power sums: the
/// coefficient of `z^k` in `exp(sum_{j>=1} q_j z^j / j)`, as a table over
/// index multisets `nu` with `|nu| = k`.
///
/// The first tables are `{- : 1}`, `{1 : 1}`, and `{1,1 : 1/2, 2 : 1/2}`.
pub fn moment_expansion(k: usize) -> CoefficientTable {
    // Work with truncated series over the coefficient tables: index = power
    // of z, entry = polynomial in the q_j.
    let one_series = || {
        let mut head = CoefficientTable::new();
        head.insert(Partition::empty(), Rational::one());
        let mut series = vec![CoefficientTable::new(); k + 1];
        series[0] = head;
        series
    };
    // log-side series: z^j picks up q_j / j.
    let mut log = vec![CoefficientTable::new(); k + 1];
    for (j, entry) in log.iter_mut().enumerate().skip(1) {
        let key = Partition::new(vec![j as u32]).expect("positive part");
        entry.insert(key, ratio(1, j as i64));
    }

    let mut acc = one_series();
    let mut power = one_series();
    let mut t_factorial = Rational::one();
    for t in 1..=k {
        power = series_product(&power, &log, k);
        t_factorial *= int(t as i64);
        let scale = Rational::one() / &t_factorial;
        for (acc_entry, power_entry) in acc.iter_mut().zip(&power) {
            for (key, coefficient) in power_entry {
                add_into(acc_entry, key.clone(), coefficient * &scale);
            }
        }
    }
    acc.pop().expect("series has k + 1 entries")
}

fn series_product(
    f: &[CoefficientTable],
    g: &[CoefficientTable],
    truncation: usize,
) -> Vec<CoefficientTable> {
    let mut out = vec![CoefficientTable::new(); truncation + 1];
    for (df, table_f) in f.iter().enumerate() {
        for (dg, table_g) in g.iter().enumerate() {
            if df + dg > truncation {
                continue;
            }
            for (key_f, coeff_f) in table_f {
                for (key_g, coeff_g) in table_g {
                    add_into(&mut out[df + dg], key_f.merge(key_g), coeff_f * coeff_g);
                }
            }
        }
    }
    out
}

fn add_into(table: &mut CoefficientTable, key: Partition, delta: Rational) {
    if delta.is_zero() {
        return;
    }
    let entry = table.entry(key.clone()).or_insert_with(Rational::zero);
    *entry += delta;
    if entry.is_zero() {
        table.remove(&key);
    }
}

/// Evaluates a coefficient table at a point: `sum_nu c_nu * q_nu(point)`.
pub fn reconstruct_moment(table: &CoefficientTable, point: &RationalPoint) -> Rational {
    table
        .iter()
        .map(|(nu, coefficient)| coefficient * point.power_sum_product(nu))
        .sum()
}

/// Serializes a coefficient table as a JSON object from partition strings to
/// rational strings, in table order: `{"1,1":"1/2","2":"1/2"}`.
pub fn table_to_json(table: &CoefficientTable) -> String {
    let mut out = String::from("{");
    let mut first = true;
    for (nu, coefficient) in table {
        if !first {
            out.push(',');
        }
        out.push_str(&format!("\"{nu}\":\"{coefficient}\""));
        first = false;
    }
    out.push('}');
    out
}

/// Reproducible stream of random evaluation points: `count` points whose
/// arity `m` is drawn from `0..=m_max`, from a ChaCha stream seeded with
/// `seed`. Same inputs, same points — on every platform.
pub fn seeded_points(seed: u64, count: usize, m_max: usize) -> Vec<RationalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let m = rng.random_range(0..=m_max);
            random_point(&mut rng, m)
        })
        .collect()
}

/// One random point of arity `m`, with small-denominator nodes.
pub fn random_point<R: Rng>(rng: &mut R, m: usize) -> RationalPoint {
    let draw = |rng: &mut R| ratio(rng.random_range(-24..=24), rng.random_range(1..=5));
    let mut a: Vec<Rational> = Vec::new();
    while a.len() < m + 1 {
        let node = draw(rng);
        if !a.contains(&node) {
            a.push(node);
        }
    }
    let b: Vec<Rational> = (0..m).map(|_| draw(rng)).collect();
    RationalPoint::new(a, b).expect("nodes drawn distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{strict_partitions, StrictPartition};
    use crate::{corners, rational::factorial};
    use num::BigUint;

    fn point(a: &[(i64, i64)], b: &[(i64, i64)]) -> RationalPoint {
        RationalPoint::new(
            a.iter().map(|&(n, d)| ratio(n, d)).collect(),
            b.iter().map(|&(n, d)| ratio(n, d)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn validation_rejects_bad_points() {
        assert_eq!(
            RationalPoint::new(vec![int(1)], vec![int(2)]).unwrap_err(),
            PointError::ArityMismatch { a_len: 1, b_len: 1 }
        );
        assert_eq!(
            RationalPoint::new(vec![int(1), int(1)], vec![int(0)]).unwrap_err(),
            PointError::RepeatedNode {
                node: "1".to_string()
            }
        );
    }

    #[test]
    fn kernel_weights_sum_to_one() {
        let p = point(&[(0, 1), (1, 1), (3, 1)], &[(1, 2), (5, 2)]);
        let total: Rational = (0..3).map(|i| p.kernel_weight(i)).sum();
        assert_eq!(total, int(1));
        assert_eq!(p.moment(0), int(1));
    }

    #[test]
    fn first_moments_in_power_sums_by_hand() {
        // moment_1 = q_1 and moment_2 = (q_1^2 + q_2) / 2.
        let p = point(&[(-1, 2), (1, 1), (7, 3)], &[(0, 1), (2, 1)]);
        let q1 = p.power_sum(1);
        let q2 = p.power_sum(2);
        assert_eq!(p.moment(1), q1);
        assert_eq!(p.moment(2), (&q1 * &q1 + q2) / int(2));
    }

    #[test]
    fn single_node_moments_are_geometric() {
        // With one a-node and no b-nodes, w_0 = 1 and moment_k = a_0^k.
        let p = point(&[(3, 2)], &[]);
        assert_eq!(p.moment(5), pow(&ratio(3, 2), 5));
    }

    #[test]
    fn expansion_tables_small() {
        let t0 = moment_expansion(0);
        assert_eq!(t0.len(), 1);
        assert_eq!(t0[&Partition::empty()], int(1));

        let t1 = moment_expansion(1);
        assert_eq!(t1.len(), 1);
        assert_eq!(t1[&"1".parse().unwrap()], int(1));

        let t2 = moment_expansion(2);
        assert_eq!(t2.len(), 2);
        assert_eq!(t2[&"1,1".parse().unwrap()], ratio(1, 2));
        assert_eq!(t2[&"2".parse().unwrap()], ratio(1, 2));
    }

    #[test]
    fn expansion_matches_symmetrizer_formula() {
        // Independent oracle: the coefficient of q_nu is 1/z_nu with
        // z_nu = prod_j j^(mult_j) * mult_j!, over all nu with |nu| = k.
        for k in 0..=6usize {
            let table = moment_expansion(k);
            let mut seen = 0usize;
            for nu_parts in weak_partitions_of(k as u32) {
                let nu = Partition::new(nu_parts).unwrap();
                let mut z = BigUint::from(1u32);
                let mut mult = std::collections::HashMap::new();
                for &j in nu.parts() {
                    *mult.entry(j).or_insert(0u64) += 1;
                }
                for (&j, &m) in &mult {
                    z *= BigUint::from(j).pow(m as u32) * factorial(m);
                }
                let expected = Rational::one() / Rational::from_integer(z.into());
                assert_eq!(table.get(&nu), Some(&expected), "k = {k}, nu = {nu}");
                seen += 1;
            }
            assert_eq!(table.len(), seen, "k = {k}: no extra monomials");
        }
    }

    fn weak_partitions_of(n: u32) -> Vec<Vec<u32>> {
        fn go(n: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if n == 0 {
                out.push(stack.clone());
                return;
            }
            for part in (1..=n.min(max)).rev() {
                stack.push(part);
                go(n - part, part, stack, out);
                stack.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn moments_reconstruct_from_power_sums_at_random_points() {
        let points = seeded_points(0xC0FFEE, 40, 4);
        for (which, p) in points.iter().enumerate() {
            for k in 0..=6u32 {
                let table = moment_expansion(k as usize);
                assert_eq!(
                    reconstruct_moment(&table, p),
                    p.moment(k),
                    "point {which}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn corner_points_match_corner_statistics() {
        for n in 0..=9 {
            for lambda in strict_partitions(n) {
                let p = RationalPoint::from_partition(&lambda);
                for k in 0..=3 {
                    assert_eq!(
                        p.power_sum(k),
                        corners::power_sum(&lambda, k),
                        "lambda = {lambda}, k = {k}"
                    );
                }
            }
        }
        let p = RationalPoint::from_partition(&"7,5,4,1".parse::<StrictPartition>().unwrap());
        assert_eq!(p.m(), 3);
        assert_eq!(p.power_sum(1), int(17));
    }

    #[test]
    fn seeded_points_are_reproducible() {
        let first = seeded_points(11, 12, 5);
        let second = seeded_points(11, 12, 5);
        assert_eq!(first, second);
        let other_seed = seeded_points(12, 12, 5);
        assert_ne!(first, other_seed);
    }

    #[test]
    fn table_json_is_ordered_and_plain() {
        assert_eq!(moment_expansion(0).len(), 1);
        assert_eq!(table_to_json(&moment_expansion(0)), r#"{"-":"1"}"#);
        assert_eq!(
            table_to_json(&moment_expansion(2)),
            r#"{"1,1":"1/2","2":"1/2"}"#
        );
    }
}
