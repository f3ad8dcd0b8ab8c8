//! The difference operator on functions of strict partitions, and the
//! telescoping machinery around it.
//!
//! For a function `g` on strict partitions, the operator sums over all
//! one-box growths of the shifted diagram with weight 1 for a new row and 2
//! for a longer row, then subtracts the value at the starting shape:
//!
//! ```text
//! (D g)(lambda) = sum_{new row} g(lambda+) + 2 sum_{longer row} g(lambda+) - g(lambda)
//! ```
//!
//! The fundamental consequences checked here:
//! - the reciprocal hook product is a fixed point: `D (1/H) = 0`;
//! - the weighted skew sums `A(n) = sum over n-box extensions of
//!   scaled_count * g` telescope: `A(n) = sum_k C(n, k) (D^k g)(mu)`;
//! - inverting that binomial transform recovers `(D^n g)(mu)` from the
//!   `A(k)`, giving two independent routes to every value.
//!
//! Key items:
//! - [`PartitionFunction`]: trait for the functions `g`.
//! - [`ReciprocalHook`], [`PowerSumSpec`], [`from_fn`]: stock functions.
//! - [`difference`], [`iterated_difference`], [`DifferenceEvaluator`].
//! - [`weighted_skew_sum`], [`verify_telescope`].

use std::collections::HashMap;

use num::One;

use crate::corners::{add_box_transitions, power_sum_product};
use crate::parallel;
use crate::partition::{extensions, Partition, SkewShape, StrictPartition};
use crate::rational::{binomial, int, Rational};
use crate::tableaux::scaled_count;

/// A function from strict partitions to exact rationals.
///
/// `Sync` is required so sweeps can evaluate in parallel.
pub trait PartitionFunction: Sync {
    /// Short human-readable description, used in reports.
    fn name(&self) -> String;

    fn eval(&self, lambda: &StrictPartition) -> Rational;
}

/// The reciprocal hook product `1/H(lambda)`, the fixed point of the
/// difference operator.
pub struct ReciprocalHook;

impl PartitionFunction for ReciprocalHook {
    fn name(&self) -> String {
        "1/H".to_string()
    }

    fn eval(&self, lambda: &StrictPartition) -> Rational {
        Rational::one() / Rational::from_integer(lambda.hook_product().into())
    }
}

/// A linear combination of content power-sum products, times an optional
/// corner power-sum product, all over the hook product:
///
/// ```text
/// g(lambda) = q_nu(lambda) / H(lambda) *
///             sum_terms coefficient * prod_t content_power_sum(r_t)
/// ```
///
/// where `content_power_sum(r) = sum over boxes of C(content, 2)^r`. These
/// are the functions whose weighted skew sums are polynomial in the number of
/// added boxes.
pub struct PowerSumSpec {
    terms: Vec<(Rational, Partition)>,
    nu: Partition,
}

impl PowerSumSpec {
    pub fn new(terms: Vec<(Rational, Partition)>, nu: Partition) -> Self {
        PowerSumSpec { terms, nu }
    }

    /// The single product `prod_t content_power_sum(r_t) / H` with
    /// coefficient one and no corner factor.
    pub fn monomial(exponents: Partition) -> Self {
        PowerSumSpec::new(vec![(Rational::one(), exponents)], Partition::empty())
    }

    /// Attaches a corner power-sum factor `q_nu`.
    pub fn with_corner_factor(mut self, nu: Partition) -> Self {
        self.nu = nu;
        self
    }
}

impl PartitionFunction for PowerSumSpec {
    fn name(&self) -> String {
        let mut pieces = Vec::new();
        for (coefficient, exponents) in &self.terms {
            let mut piece = String::new();
            if !coefficient.is_one() {
                piece.push_str(&format!("{coefficient}*"));
            }
            if exponents.is_empty() {
                piece.push('1');
            } else {
                piece.push_str(&format!("p({exponents})"));
            }
            pieces.push(piece);
        }
        let mut name = pieces.join(" + ");
        if pieces.len() > 1 {
            name = format!("({name})");
        }
        if !self.nu.is_empty() {
            name.push_str(&format!("*q({})", self.nu));
        }
        name.push_str("/H");
        name
    }

    fn eval(&self, lambda: &StrictPartition) -> Rational {
        let content_part: Rational = self
            .terms
            .iter()
            .map(|(coefficient, exponents)| {
                let product: Rational = exponents
                    .parts()
                    .iter()
                    .map(|&r| Rational::from_integer(lambda.content_power_sum(r).into()))
                    .product();
                coefficient * product
            })
            .sum();
        let corner_part = power_sum_product(lambda, &self.nu);
        let hooks = Rational::from_integer(lambda.hook_product().into());
        content_part * corner_part / hooks
    }
}

/// Wraps a closure as a [`PartitionFunction`].
pub fn from_fn<F>(name: &str, f: F) -> impl PartitionFunction
where
    F: Fn(&StrictPartition) -> Rational + Sync,
{
    struct Closure<F> {
        name: String,
        f: F,
    }
    impl<F> PartitionFunction for Closure<F>
    where
        F: Fn(&StrictPartition) -> Rational + Sync,
    {
        fn name(&self) -> String {
            self.name.clone()
        }
        fn eval(&self, lambda: &StrictPartition) -> Rational {
            (self.f)(lambda)
        }
    }
    Closure {
        name: name.to_string(),
        f,
    }
}

/// One application of the difference operator at `lambda`.
pub fn difference(g: &dyn PartitionFunction, lambda: &StrictPartition) -> Rational {
    let grown: Rational = add_box_transitions(lambda)
        .iter()
        .map(|t| int(i64::from(t.multiplicity)) * g.eval(&t.target))
        .sum();
    grown - g.eval(lambda)
}

/// `(D^order g)(lambda)` via a fresh [`DifferenceEvaluator`].
pub fn iterated_difference(
    g: &dyn PartitionFunction,
    lambda: &StrictPartition,
    order: u32,
) -> Rational {
    DifferenceEvaluator::new(g).value(lambda, order)
}

/// Memoized evaluator for iterated differences.
///
/// `(D^r g)(lambda)` expands into `(D^(r-1) g)` at `lambda` and its growths,
/// so repeated queries share a `(order, shape)` table.
pub struct DifferenceEvaluator<'a> {
    g: &'a dyn PartitionFunction,
    memo: HashMap<(u32, StrictPartition), Rational>,
}

impl<'a> DifferenceEvaluator<'a> {
    pub fn new(g: &'a dyn PartitionFunction) -> Self {
        DifferenceEvaluator {
            g,
            memo: HashMap::new(),
        }
    }

    pub fn value(&mut self, lambda: &StrictPartition, order: u32) -> Rational {
        let key = (order, lambda.clone());
        if let Some(known) = self.memo.get(&key) {
            return known.clone();
        }
        let result = if order == 0 {
            self.g.eval(lambda)
        } else {
            let grown: Rational = add_box_transitions(lambda)
                .into_iter()
                .map(|t| int(i64::from(t.multiplicity)) * self.value(&t.target, order - 1))
                .sum();
            grown - self.value(lambda, order - 1)
        };
        self.memo.insert(key, result.clone());
        result
    }
}

/// The weighted skew sum
///
/// ```text
/// A(n) = sum over n-box extensions lambda of mu of
///        scaled_count(lambda/mu) * g(lambda)
/// ```
///
/// evaluated exactly, in parallel when the `parallel` feature is on.
pub fn weighted_skew_sum(g: &dyn PartitionFunction, mu: &StrictPartition, n: u64) -> Rational {
    let lambdas = extensions(mu, n);
    parallel::sum_with(&lambdas, |lambda| {
        let shape = SkewShape::new(lambda.clone(), mu.clone())
            .expect("extensions contain their base shape");
        Rational::from_integer(scaled_count(&shape).into()) * g.eval(lambda)
    })
}

/// One row of a telescoping check: the four routes to the same quantities at
/// a given `n`.
#[derive(Clone, Debug)]
pub struct TelescopeRow {
    pub n: u64,
    /// `A(n)` by direct enumeration.
    pub enumerated: Rational,
    /// `sum_k C(n, k) (D^k g)(mu)`.
    pub binomial_sum: Rational,
    /// `(D^n g)(mu)` by operator recursion.
    pub iterated: Rational,
    /// `sum_k (-1)^(n+k) C(n, k) A(k)`, the inverted transform.
    pub inverted: Rational,
}

impl TelescopeRow {
    /// Both pairs of routes agree.
    pub fn pass(&self) -> bool {
        self.enumerated == self.binomial_sum && self.iterated == self.inverted
    }
}

/// Result of [`verify_telescope`]: one row per `n` up to the requested bound.
#[derive(Clone, Debug)]
pub struct TelescopeReport {
    pub function: String,
    pub mu: StrictPartition,
    pub rows: Vec<TelescopeRow>,
}

impl TelescopeReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(TelescopeRow::pass)
    }

    pub fn first_failure(&self) -> Option<&TelescopeRow> {
        self.rows.iter().find(|row| !row.pass())
    }
}

/// Checks the telescoping identity and its inversion for `g` based at `mu`,
/// for all `0 <= n <= n_max`:
///
/// - `A(n)` enumerated directly equals the binomial sum of iterated
///   differences at `mu`;
/// - `(D^n g)(mu)` equals the alternating binomial sum of the `A(k)`.
pub fn verify_telescope(
    g: &dyn PartitionFunction,
    mu: &StrictPartition,
    n_max: u64,
) -> TelescopeReport {
    let mut evaluator = DifferenceEvaluator::new(g);
    let differences: Vec<Rational> = (0..=n_max)
        .map(|order| evaluator.value(mu, order as u32))
        .collect();
    let sums: Vec<Rational> = (0..=n_max).map(|n| weighted_skew_sum(g, mu, n)).collect();

    let rows = (0..=n_max)
        .map(|n| {
            let binomial_sum = (0..=n)
                .map(|k| {
                    Rational::from_integer(binomial(n, k).into()) * &differences[k as usize]
                })
                .sum();
            let inverted = (0..=n)
                .map(|k| {
                    let sign = if (n + k) % 2 == 0 { int(1) } else { int(-1) };
                    sign * Rational::from_integer(binomial(n, k).into()) * &sums[k as usize]
                })
                .sum();
            TelescopeRow {
                n,
                enumerated: sums[n as usize].clone(),
                binomial_sum,
                iterated: differences[n as usize].clone(),
                inverted,
            }
        })
        .collect();

    TelescopeReport {
        function: g.name(),
        mu: mu.clone(),
        rows,
    }
}
